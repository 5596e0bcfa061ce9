"""Shared row-judging helper for the check-row producing functions.

Re-implements the pass rule locally so unit tests do not depend on the
report grader they are meant to cross-check.
"""


def assert_rows(rows, reducible, ctx=""):
    assert rows is not None
    for row in rows:
        name = row.get("name", "?")
        where = f"{ctx}:{name}"
        if "degenerate" in row or row.get("status") == "no-certificate":
            continue
        if row.get("flag"):
            agree = row["lhs"] == row["rhs"]
            assert agree == (row["expect"] == "equal"), where
            continue
        agree = row["lhs"] == row["rhs"]
        if row["gate"] == "always":
            assert agree, where
        else:
            assert agree == reducible, where


def names_of(rows):
    return [r.get("name") for r in rows]
