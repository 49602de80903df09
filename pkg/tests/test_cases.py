"""Built-in cases against their frozen reports."""

import json

import pytest

from sntorsion.cases import CASES, list_cases, load_golden, run_case, verify_case
from sntorsion.reports import report_from_json


def test_registry_contents():
    ids = list_cases()
    assert "s7-3x5" in ids and "s13-3x11" in ids and "lemma43-grid" in ids
    assert len(ids) == len(set(ids)) == 7


@pytest.mark.parametrize("case_id", sorted(CASES))
def test_every_case_matches_its_frozen_report(case_id):
    assert verify_case(case_id) is None


def test_goldens_are_valid_reports():
    for case_id in CASES:
        rep = report_from_json(json.dumps(load_golden(case_id)))
        assert rep.case_id == case_id


def test_s7_case_details():
    rep = run_case("s7-3x5")
    assert (rep.kind, rep.n, rep.p, rep.q) == ("S", 7, 5, 3)
    assert rep.verdict == "excluded"
    assert rep.extras["power_independent"] is True


def test_s13_case_details():
    rep = run_case("s13-3x11")
    assert rep.verdict == "excluded"
    assert rep.stage_q["raw_count"] == 141
    assert rep.stage_q["filters"][-1]["count_after"] == 18
    sizes = {g["name"]: len(g["pairs"]) for g in rep.stage_pq["groups"]}
    assert sorted(sizes.values(), reverse=True) == [12, 5, 1]
    assert all(
        pair["status"] == "infeasible"
        for g in rep.stage_pq["groups"]
        for pair in g["pairs"]
    )


def test_thm32_cases_exclude():
    for case_id in ("thm32-11-7-5", "thm32-13-11-7", "thm32-17-11-7", "thm32-17-13-11"):
        rep = run_case(case_id)
        assert rep.verdict == "excluded", case_id


def test_thm32_vacuous_instances_have_empty_top_stage():
    # when the forced order-q candidate already fails the power filter, the
    # top-level systems are never built
    for case_id in ("thm32-13-11-7", "thm32-17-13-11"):
        rep = run_case(case_id)
        assert rep.stage_q["filters"][-1]["count_after"] == 0
        assert all(g["pairs"] == [] for g in rep.stage_pq["groups"])


def test_lemma43_grid_counts():
    rep = run_case("lemma43-grid")
    grid = rep.extras["grid"]
    assert {k: v["solutions_in_box"] for k, v in grid.items()} == {
        "5": 0, "7": 0, "11": 61, "13": 660,
    }


def test_run_case_is_deterministic_across_thread_counts():
    a = run_case("s13-3x11", threads=1)
    b = run_case("s13-3x11", threads=8)
    assert a.canonical_json() == b.canonical_json()


def test_run_case_rejects_unknown_ids():
    with pytest.raises(KeyError):
        run_case("nonesuch")


def test_verify_case_reports_a_divergence_path(monkeypatch):
    import sntorsion.cases as cases_mod

    real = cases_mod.load_golden

    def corrupted(case_id):
        data = dict(real(case_id))
        data["verdict"] = "candidates-survive"
        return data

    monkeypatch.setattr(cases_mod, "load_golden", corrupted)
    diff = verify_case("s7-3x5")
    assert diff is not None and "verdict" in diff
