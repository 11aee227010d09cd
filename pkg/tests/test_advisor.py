import pytest

from aerocell import (
    DisasterSpec,
    FleetSpec,
    HomogeneousTown,
    ParameterError,
    RadioGlobals,
    ScenarioConfig,
    advise,
)
from aerocell.advisor import recommendation_line, report_to_csv
from aerocell.channel import LinkState, PlatformProfile


def no_tbs_scenario(platforms_file=None):
    # a vanishing window: no terrestrial stations ever survive
    return ScenarioConfig(
        town=HomogeneousTown(0.001, 0.2),
        disaster=DisasterSpec(0.0, 0.5),
        fleet=FleetSpec("drone", 0),
        radio=RadioGlobals(noise_psd_w_hz=4e-21),
        platforms_file=platforms_file,
    )


def test_identical_candidates_tie_breaks_by_grid_order():
    scen = no_tbs_scenario()
    report = advise(scen, [("drone", 2), ("drone", 2)], budgets=(200, 400), seed=3)
    assert report.best == FleetSpec("drone", 2)
    assert report.margin_bps == 0.0
    assert report.statistically_resolved is False


def test_drone_beats_empty_fleet_without_terrestrial_support():
    scen = no_tbs_scenario()
    report = advise(scen, [("drone", 0), ("drone", 1)], budgets=(100, 400), seed=1)
    assert report.best == FleetSpec("drone", 1)
    table = {r.fleet: r.estimate for r in report.table}
    assert table[FleetSpec("drone", 1)].coverage_probability == 1.0
    assert table[FleetSpec("drone", 0)].coverage_probability == 0.0
    assert report.statistically_resolved


def test_report_is_deterministic():
    scen = no_tbs_scenario()
    a = advise(scen, [("drone", 1), ("drone", 5), ("drone", 15)], budgets=(100, 300), seed=9)
    b = advise(scen, [("drone", 1), ("drone", 5), ("drone", 15)], budgets=(100, 300), seed=9)
    assert a == b


def test_best_is_argmax_of_final_table():
    scen = no_tbs_scenario()
    report = advise(scen, [("drone", 1), ("drone", 5), ("drone", 15)], budgets=(100, 200, 400), seed=2)
    finals = [r for r in report.table if r.final_round]
    assert len(finals) >= 2
    top = max(finals, key=lambda r: r.estimate.ergodic_capacity_bps)
    assert report.best == top.fleet
    assert report.margin_bps >= 0.0


def test_budget_and_candidate_validation():
    scen = no_tbs_scenario()
    with pytest.raises(ParameterError):
        advise(scen, [("drone", 1)], seed=0)
    with pytest.raises(ParameterError):
        advise(scen, [("drone", 1), ("drone", 2)], budgets=(), seed=0)
    with pytest.raises(ParameterError):
        advise(scen, [("drone", 1), ("drone", 2)], budgets=(0,), seed=0)


def test_dominated_candidate_never_wins(tmp_path):
    # same fleet size, strictly higher transmit power, common random numbers:
    # the weaker platform can never come out on top
    path = tmp_path / "platforms.ini"
    path.write_text(
        "[table]\nversion = 1\n\n"
        "[tbs]\nkind = terrestrial\ntransmit_power_w = 10.0\naltitude_km = 0\n"
        "alpha = 3.0\nnakagami_m = 1.0\nexcess_loss = 0.692\n\n"
        "[drone]\nkind = aerial\ntransmit_power_w = 1.585\naltitude_km = 0.1\n"
        "alpha_los = 2.0\nalpha_nlos = 3.0\nnakagami_m_los = 2.0\nnakagami_m_nlos = 1.0\n"
        "excess_loss_los = 0.692\nexcess_loss_nlos = 0.005\n\n"
        "[strong_drone]\nkind = aerial\ntransmit_power_w = 3.17\naltitude_km = 0.1\n"
        "alpha_los = 2.0\nalpha_nlos = 3.0\nnakagami_m_los = 2.0\nnakagami_m_nlos = 1.0\n"
        "excess_loss_los = 0.692\nexcess_loss_nlos = 0.005\n"
    )
    scen = no_tbs_scenario(platforms_file=str(path))
    for seed in (0, 1, 2, 3):
        report = advise(scen, [("drone", 3), ("strong_drone", 3)], budgets=(150, 300), seed=seed)
        assert report.best == FleetSpec("strong_drone", 3)


def test_report_csv_and_recommendation(tmp_path):
    scen = no_tbs_scenario()
    report = advise(scen, [("drone", 1), ("drone", 5)], budgets=(100, 200), seed=4)
    line = recommendation_line(report)
    assert "best fleet: drone x" in line
    out = tmp_path / "report.csv"
    report_to_csv(report, out)
    lines = out.read_text().splitlines()
    assert lines[0].startswith("platform,n_a,budget_iterations")
    assert len(lines) == 1 + len(report.table)
