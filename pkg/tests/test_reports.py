"""Report schema: validation, serialization, divergence location."""

import json

import pytest

from sntorsion.reports import CaseReport, first_divergence, report_from_json


def small_report():
    return CaseReport(
        case_id="demo",
        kind="S",
        n=7,
        p=5,
        q=3,
        verdict="excluded",
        stage_q={
            "rows": [{"name": "pi", "ells": [0, 1]}],
            "raw_count": 4,
            "filters": [{"name": "q-power-weighted-sum", "count_after": 1}],
            "survivors": [[1, 0]],
        },
        stage_pq={
            "groups": [
                {
                    "name": "main",
                    "rows": [{"name": "hook4", "ells": [0, 5]}],
                    "pairs": [
                        {
                            "q_candidate": [1, 0],
                            "status": "infeasible",
                            "certificate": ["mu_0(hook4)", "mu_5(hook4)"],
                        }
                    ],
                }
            ]
        },
        extras={"note": "hand-built"},
        elapsed_s=0.123,
    )


def test_validate_accepts_a_consistent_report():
    small_report().validate()


def test_validate_rejects_filters_that_grow_the_candidate_set():
    rep = small_report()
    rep.stage_q["filters"][0]["count_after"] = 9
    with pytest.raises(ValueError):
        rep.validate()


def test_validate_rejects_excluded_verdicts_with_surviving_pairs():
    rep = small_report()
    rep.stage_pq["groups"][0]["pairs"][0]["status"] = "solutions"
    with pytest.raises(ValueError):
        rep.validate()


def test_canonical_json_omits_timing():
    rep = small_report()
    data = json.loads(rep.canonical_json())
    assert "elapsed_s" not in data
    assert data["schema"] == "report-v1"
    assert data["group"] == "S7"
    assert "elapsed_s" in rep.to_dict(include_timing=True)


def test_canonical_json_is_independent_of_elapsed_time():
    a, b = small_report(), small_report()
    b.elapsed_s = 99.0
    assert a.canonical_json() == b.canonical_json()


def test_json_round_trip():
    rep = small_report()
    back = report_from_json(rep.canonical_json())
    assert back.to_dict() == rep.to_dict()
    assert back.elapsed_s == 0.0  # timing is not serialized


def test_report_from_json_rejects_other_schemas():
    bad = json.dumps({"schema": "report-v0", "case_id": "x", "group": "S7"})
    with pytest.raises(ValueError):
        report_from_json(bad)


def test_render_text_mentions_the_load_bearing_numbers():
    text = small_report().render_text()
    assert "verdict: excluded" in text
    assert "candidates: 4" in text
    assert "after q-power-weighted-sum: 1" in text
    assert "mu_0(hook4)" in text


def test_first_divergence_on_equal_dicts():
    d = small_report().to_dict()
    assert first_divergence(d, json.loads(json.dumps(d))) is None


def test_first_divergence_pinpoints_the_field():
    a = small_report().to_dict()
    b = json.loads(json.dumps(a))
    b["stage_q"]["raw_count"] = 5
    diff = first_divergence(a, b)
    assert diff == "$.stage_q.raw_count: 5 != 4"


def test_first_divergence_reports_missing_and_extra_fields():
    a = {"x": 1, "y": 2}
    assert first_divergence(a, {"x": 1}) == "$.y: missing field"
    assert first_divergence({"x": 1}, a) == "$.y: unexpected field"
    assert first_divergence([1, 2], [1]) == "$: length 1 != 2"
    assert first_divergence([1, [2, 3]], [1, [2, 4]]) == "$[1][1]: 4 != 3"
