"""Deterministic random substreams for reproducible (and parallelizable) Monte Carlo.

Every random draw in the simulator comes from a generator derived statelessly
from ``(master_seed, purpose, ...)`` integers, so results never depend on call
order, worker count, or what other modules drew in between.  Streams used
inside one iteration are split by purpose: changing the fleet size must not
shift the random numbers consumed by the town or by terrestrial fading,
otherwise common-random-number comparisons between fleet configurations fall
apart.

Substreams are counter-based (Philox): the master seed is the key and the
key components index the 256-bit counter, which makes stream construction
cheap enough to do per iteration.  The first key component namespaces the
stream (purpose constants below); later components are free indices such as
the iteration number.
"""

from __future__ import annotations

import numpy as np

# Per-iteration substream purposes.
TOWN = 0
TBS_FADING = 1
FLEET_POSITION = 2
LINK_STATE = 3
ABS_FADING = 4
# Record-level purposes.
FROZEN_FLEET = 101


def substream(master_seed: int, *key: int) -> np.random.Generator:
    """Independent generator for the tuple (master_seed, *key); up to 3 components."""
    if len(key) > 3:
        raise ValueError("at most 3 key components fit the substream counter")
    counter = np.zeros(4, dtype=np.uint64)
    for j, k in enumerate(key):
        if int(k) < 0:
            raise ValueError("seed components must be non-negative integers")
        counter[j] = int(k)
    if int(master_seed) < 0:
        raise ValueError("seed components must be non-negative integers")
    return np.random.Generator(np.random.Philox(key=int(master_seed), counter=counter))


def derive_seed(master_seed: int, *key: int) -> int:
    """Deterministic 64-bit child seed, e.g. one per sweep record."""
    parts = [int(master_seed)] + [int(k) for k in key]
    if any(p < 0 for p in parts):
        raise ValueError("seed components must be non-negative integers")
    return int(np.random.SeedSequence(parts).generate_state(1, np.uint64)[0])
