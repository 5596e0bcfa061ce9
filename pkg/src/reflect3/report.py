"""Turning check rows into replayable reports.

Verification code emits plain dicts (see the row convention in the
emitting modules). This module grades them against the system's
reducibility, renders exact values for witnesses, and packs everything
into a JSON-stable report whose parse/serialize cycle is the identity.

Statuses: "pass" and "fail" grade ordinary rows; "flagged" marks a
confirmed discrepancy in the published text (its witness carries both
computed values); "skipped" records a row whose hypothesis or formula
does not apply at these parameters; "no-certificate" records a question
the package deliberately leaves open. Only "fail" makes a report
failing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dfield

from .errors import BadInput

REPORT_VERSION = 1

_STATUSES = ("pass", "fail", "flagged", "skipped", "no-certificate")


def render(value) -> str:
    """Exact string form of a witness value."""
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(render(x) for x in value) + ")"
    return repr(value)


@dataclass(frozen=True)
class Check:
    name: str
    claim: str
    status: str
    witness: dict

    def to_dict(self) -> dict:
        return {"name": self.name, "claim": self.claim,
                "status": self.status, "witness": dict(self.witness)}


def _grade_plain(row: dict, reducible: bool) -> Check:
    equal = row["lhs"] == row["rhs"]
    if row["gate"] == "always":
        claim = "both sides agree at these parameters"
        ok = equal
    else:
        claim = "agreement is equivalent to reducibility"
        ok = equal == reducible
    return Check(row["name"], claim, "pass" if ok else "fail",
                 {"lhs": render(row["lhs"]), "rhs": render(row["rhs"]),
                  "equal": render(equal)})


def _grade_flag(row: dict) -> Check:
    equal = row["lhs"] == row["rhs"]
    confirmed = equal == (row["expect"] == "equal")
    return Check(row["name"], row["note"],
                 "flagged" if confirmed else "fail",
                 {"published": render(row["lhs"]),
                  "computed": render(row["rhs"])})


def evaluate_row(row: dict, reducible: bool) -> Check:
    if "degenerate" in row:
        return Check(row["name"], row["degenerate"], "skipped", {})
    if row.get("status") == "no-certificate":
        return Check(row["name"], row.get("note", ""), "no-certificate", {})
    if row.get("flag"):
        return _grade_flag(row)
    return _grade_plain(row, reducible)


def evaluate_rows(rows, reducible: bool) -> list[Check]:
    return [evaluate_row(r, reducible) for r in rows]


@dataclass
class Report:
    suite: str
    params: dict
    checks: list = dfield(default_factory=list)
    elapsed_ms: int = 0
    version: int = REPORT_VERSION

    def extend(self, checks) -> None:
        self.checks.extend(checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def counts(self) -> dict:
        out = {s: 0 for s in _STATUSES}
        for c in self.checks:
            out[c.status] += 1
        return out

    def to_dict(self) -> dict:
        return {"version": self.version, "suite": self.suite,
                "params": dict(self.params), "elapsed_ms": self.elapsed_ms,
                "checks": [c.to_dict() for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def parse_report(text: str) -> Report:
    """Inverse of Report.to_json, validating the schema."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise BadInput(f"report is not valid JSON: {err}") from None
    if not isinstance(data, dict):
        raise BadInput("report must be a JSON object")
    for key in ("version", "suite", "params", "elapsed_ms", "checks"):
        if key not in data:
            raise BadInput(f"report is missing {key!r}")
    checks = []
    for raw in data["checks"]:
        missing = {"name", "claim", "status", "witness"} - set(raw)
        if missing:
            raise BadInput(f"check is missing {sorted(missing)}")
        if raw["status"] not in _STATUSES:
            raise BadInput(f"unknown check status {raw['status']!r}")
        checks.append(Check(raw["name"], raw["claim"], raw["status"],
                            dict(raw["witness"])))
    return Report(data["suite"], dict(data["params"]), checks,
                  data["elapsed_ms"], data["version"])


def render_markdown(report: Report) -> str:
    counts = report.counts
    head = [f"# verification report: {report.suite}", ""]
    head.extend(f"- {k}: {v}" for k, v in report.params.items())
    head.append("- " + ", ".join(f"{s}: {n}" for s, n in counts.items() if n))
    head.extend(["", "| check | status | detail |", "| --- | --- | --- |"])
    body = []
    for c in report.checks:
        if c.status == "pass":
            detail = ""
        elif c.status in ("fail", "flagged"):
            detail = "; ".join(f"{k} = {v}" for k, v in c.witness.items())
        else:
            detail = c.claim
        body.append(f"| {c.name} | {c.status} | {detail} |")
    return "\n".join(head + body) + "\n"
