"""Grading of check rows into reports, serialization, and the markdown
rendering used by the CLI."""

import pytest

from reflect3.errors import BadInput
from reflect3.report import (Check, Report, evaluate_row, evaluate_rows,
                             parse_report, render, render_markdown)


def test_render_scalars():
    assert render(None) == "none"
    assert render(True) == "true"
    assert render(False) == "false"
    assert render((1, 2)) == "(1, 2)"


def test_always_gate():
    row = {"name": "x", "lhs": 1, "rhs": 1, "gate": "always"}
    assert evaluate_row(row, reducible=False).status == "pass"
    row["rhs"] = 2
    assert evaluate_row(row, reducible=False).status == "fail"


def test_reducible_gate_both_directions():
    agree = {"name": "x", "lhs": 3, "rhs": 3, "gate": "reducible"}
    differ = {"name": "x", "lhs": 3, "rhs": 4, "gate": "reducible"}
    assert evaluate_row(agree, True).status == "pass"
    assert evaluate_row(agree, False).status == "fail"
    assert evaluate_row(differ, True).status == "fail"
    assert evaluate_row(differ, False).status == "pass"


def test_degenerate_becomes_skipped():
    row = {"name": "x", "degenerate": "division by zero parameter"}
    c = evaluate_row(row, True)
    assert c.status == "skipped"


def test_no_certificate_passthrough():
    row = {"name": "x", "status": "no-certificate", "note": "group is finite"}
    c = evaluate_row(row, True)
    assert c.status == "no-certificate"
    assert "finite" in c.claim


def test_flag_rows():
    flagged = {"name": "x", "flag": True, "expect": "different",
               "lhs": 1, "rhs": 2, "note": "published value differs"}
    c = evaluate_row(flagged, True)
    assert c.status == "flagged"
    assert c.witness["published"] == "1"
    assert c.witness["computed"] == "2"
    broken = dict(flagged, rhs=1)
    assert evaluate_row(broken, True).status == "fail"


def test_report_counts_and_failures():
    rows = [{"name": "a", "lhs": 1, "rhs": 1, "gate": "always"},
            {"name": "b", "lhs": 1, "rhs": 2, "gate": "always"},
            {"name": "c", "degenerate": "nope"}]
    rep = Report("demo", {"label": "t"}, evaluate_rows(rows, True), 5)
    assert rep.counts["pass"] == 1
    assert rep.counts["fail"] == 1
    assert rep.counts["skipped"] == 1
    assert [c.name for c in rep.failures] == ["b"]


def test_json_roundtrip():
    rep = Report("demo", {"label": "t", "reducible": True},
                 [Check("a", "claim text", "pass", {"k": "v"})], 7)
    back = parse_report(rep.to_json())
    assert back.suite == "demo"
    assert back.params == rep.params
    assert back.elapsed_ms == 7
    assert back.checks[0] == rep.checks[0]
    assert back.to_json() == rep.to_json()


def test_parse_report_rejects_malformed():
    with pytest.raises(BadInput):
        parse_report("not json")
    with pytest.raises(BadInput):
        parse_report("[1, 2]")
    with pytest.raises(BadInput):
        parse_report('{"suite": "x"}')
    good = Report("demo", {}, [Check("a", "c", "pass", {})], 0).to_json()
    bad = good.replace('"pass"', '"maybe"')
    with pytest.raises(BadInput):
        parse_report(bad)


def test_render_markdown_contains_rows():
    rep = Report("demo", {"label": "sys"},
                 [Check("good-row", "both sides agree", "pass", {}),
                  Check("bad-row", "does not hold", "fail",
                        {"lhs": "1", "rhs": "2"})], 3)
    text = render_markdown(rep)
    assert "good-row" in text and "bad-row" in text
    assert "| check | status |" in text
