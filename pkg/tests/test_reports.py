import dataclasses

import pytest

from cavitycharge.reports import (
    EXPECTED_DOCUMENTED,
    ReportRow,
    budget_report,
    build_report,
    bundled_scenario,
    load_manifest,
    render_csv,
    render_text,
    report_exit_code,
)


@pytest.fixture(scope="module")
def rows():
    return build_report()


def test_manifest_covers_every_computer():
    ids = [spec["id"] for spec in load_manifest()]
    assert len(ids) == len(set(ids))
    assert set(EXPECTED_DOCUMENTED) <= set(ids)


def test_no_undocumented_mismatch(rows):
    assert all(r.status != "MISMATCH" for r in rows)


def test_info_rows_have_na_status(rows):
    by_id = {r.row_id: r for r in rows}
    transmission = by_id["resonant_transmission"]
    assert transmission.status == "N/A"
    assert transmission.reference is None
    assert 0.0 < transmission.computed < 1.0


def test_documented_set_is_exactly_the_three_known(rows):
    documented = {r.row_id for r in rows if r.status == "MISMATCH-DOCUMENTED"}
    assert documented == EXPECTED_DOCUMENTED


def test_exit_code_zero_on_default_report(rows):
    assert report_exit_code(rows) == 0


def test_exit_code_flags_vanished_documented_row(rows):
    trimmed = [r for r in rows if r.row_id != "gate_ratio_rabi"]
    assert report_exit_code(trimmed) == 1


def test_exit_code_flags_new_mismatch(rows):
    bad = rows + [
        ReportRow("fake", "fake row", "", 1.0, 0.0, 2.0, 0.5, "MISMATCH", "")
    ]
    assert report_exit_code(bad) == 1


def test_match_iff_within_declared_tolerance(rows):
    by_id = {r.row_id: r for r in rows}
    specs = {spec["id"]: spec for spec in load_manifest()}
    for row in rows:
        spec = specs[row.row_id]
        if spec["kind"] in ("rel",) and row.status == "MATCH":
            assert row.deviation <= spec["tol"] * (1 + 1e-6)
    # the boundary row: exactly at its declared 1% tolerance
    r = by_id["film_resistance"]
    assert r.status == "MATCH"
    assert r.deviation == pytest.approx(0.01, abs=1e-12)


def test_report_is_deterministic():
    a = build_report()
    b = build_report()
    assert [dataclasses.astuple(r) for r in a] == [dataclasses.astuple(r) for r in b]
    assert render_csv(a) == render_csv(b)
    assert render_text(a) == render_text(b)


def test_seed_changes_only_monte_carlo_sigmas(rows):
    other = build_report(seed=123)
    for r0, r1 in zip(rows, other):
        assert r0.row_id == r1.row_id
        assert r0.status == r1.status
        if not r0.row_id.startswith(("kappa_", "finesse_mc")):
            assert r0.computed == r1.computed


def test_render_text_structure(rows):
    text = render_text(rows)
    assert "MISMATCH-DOCUMENTED" in text
    assert text.count("\n") == len(rows) + 4  # header, rule, rows, rule, summary
    assert "0 MISMATCH\n" in text


def test_render_csv_structure(rows):
    lines = render_csv(rows).splitlines()
    assert lines[0].startswith("row_id,")
    assert len(lines) == len(rows) + 1
    assert all(len(line.split(",")) == 9 for line in lines)


# -- budgets -----------------------------------------------------------------


@pytest.fixture(scope="module")
def scn():
    return bundled_scenario()


@pytest.mark.parametrize(
    "target,q1_ref",
    [
        ("cooling", 1400.0),
        ("lamb-dicke", 230.0),
        ("coupling", 100.0),
        ("rydberg-coherence", 54.0),
        ("rydberg-gate", 140.0),
    ],
)
def test_budget_charge_limits(scn, target, q1_ref):
    rows, header, sweep = budget_report(scn, target)
    values = dict((name, value) for name, value, _unit in rows)
    assert values["q1_max"] == pytest.approx(q1_ref, rel=0.05)
    assert len(sweep) == 200
    assert header.count(",") == 1


def test_budget_gate_rows(scn):
    rows, _header, sweep = budget_report(scn, "gate")
    values = dict((name, value) for name, value, _unit in rows)
    assert values["delta_x_over_secular"] == pytest.approx(0.013, abs=0.001)
    assert values["delta_x_over_rabi"] == pytest.approx(0.65, rel=0.02)
    assert values["within_threshold"] == 0.0
    assert values["equal_charge_bound"] == pytest.approx(13.0, rel=0.10)
    # the sweep crosses the threshold at the bound
    below = [q for q, ratio in sweep if ratio < 0.013]
    assert max(below) == pytest.approx(values["equal_charge_bound"], rel=0.05)


def test_budget_charging_rows(scn):
    rows, header, sweep = budget_report(scn, "charging")
    values = dict((name, value) for name, value, _unit in rows)
    assert 100.0 <= values["equilibrium_charge"] <= 160.0
    assert values["rc_time"] < 1e-9
    assert values["photoelectron_rate"] == 4e11  # scenario override
    assert values["photoelectron_rate_first_principles"] == pytest.approx(
        3.7e14, rel=0.01
    )
    assert header.startswith("power_w")
    assert len(sweep) == 200


def test_budget_unknown_target(scn):
    with pytest.raises(Exception):
        budget_report(scn, "warp-drive")
