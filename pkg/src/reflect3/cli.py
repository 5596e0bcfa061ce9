"""Command line front end.

Three subcommands: `rep` prints one system's parameters, reducibility
verdict, axis vectors and minor table; `verify` runs named suites over
parameter systems and writes a JSON or Markdown report; `enumerate`
grows a group ball and reports its growth, closure and order.

Exit codes: 0 success (for verify: no failed check), 1 at least one
failed check, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .defaults import default_pack, load_params_file, params_from_config
from .errors import Reflect3Error
from .groups import bfs_ball
from .params import b_vectors, build_rep, t_relations
from .report import render, render_markdown
from .suites import run_suites

PASS_EXIT, FAIL_EXIT, INPUT_EXIT = 0, 1, 2


def _parse_l(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def _config_from_flags(args) -> dict:
    p, q, r = (int(x) for x in args.pqr.split(","))
    cfg = {"p": p, "q": q, "r": r, "mode": args.mode}
    if args.mode == "reducible":
        cfg["root"] = args.root
    if args.l is not None:
        cfg["l"] = _parse_l(args.l)
        cfg["mode"] = "explicit"
    if args.conjugates:
        cfg["conjugates"] = [int(x) for x in args.conjugates.split(",")]
    if args.ext_square is not None:
        cfg["ext_square"] = args.ext_square
    return cfg


def _systems(args, fallback_to_pack: bool) -> list:
    if getattr(args, "params", None):
        return load_params_file(args.params)
    if getattr(args, "pqr", None):
        return [params_from_config(_config_from_flags(args))]
    if fallback_to_pack:
        return default_pack()
    raise Reflect3Error("need --pqr or --params")


def _add_system_flags(sub) -> None:
    sub.add_argument("--pqr", help="orders, e.g. 3,3,3")
    sub.add_argument("--mode", choices=("reducible", "explicit"),
                     default="reducible")
    sub.add_argument("--root", choices=("plus", "minus"), default="plus")
    sub.add_argument("--l", help="module parameter (rational or JSON "
                                 "coefficient arrays); implies explicit mode")
    sub.add_argument("--conjugates", help="rotation classes, e.g. 1,1,1")
    sub.add_argument("--ext-square", dest="ext_square",
                     help="rational whose square root the field adjoins")
    sub.add_argument("--params", help="JSON file with one config or a list")


def cmd_rep(args) -> int:
    for p in _systems(args, fallback_to_pack=False):
        build_rep(p)
        verdict = "reducible" if p.is_reducible() else "irreducible"
        print(f"system {p.label()}")
        print(f"orders: p={p.p} q={p.q} r={p.r}  mode: {p.mode}")
        print(f"alpha = {render(p.alpha)}  beta = {render(p.beta)}  "
              f"gamma = {render(p.gamma)}")
        print(f"l = {render(p.l)}  m = {render(p.m)}")
        print(f"alpha*l = {render(p.alphal)}  beta*m = {render(p.betam)}")
        print(f"delta = {render(p.delta())}  ->  {verdict}")
        print("axis vectors:")
        for k, b in enumerate(b_vectors(p), start=1):
            print(f"  b{k} = {render(b)}")
        print("minor table (value = unit * delta):")
        for m in t_relations(p):
            i, j = m["pos"]
            print(f"  ({i},{j}): value = {render(m['value'])}, "
                  f"unit = {render(m['unit'])}")
        print()
    return PASS_EXIT


def cmd_verify(args) -> int:
    systems = _systems(args, fallback_to_pack=True)
    reports = run_suites(args.suite, systems, seed=args.seed,
                         radius=args.radius, cap=args.cap)
    if args.format == "json":
        text = json.dumps([r.to_dict() for r in reports], indent=2,
                          sort_keys=True)
    else:
        text = "\n".join(render_markdown(r) for r in reports)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    counts = {}
    for r in reports:
        for c in r.checks:
            counts[c.status] = counts.get(c.status, 0) + 1
    summary = ", ".join(f"{k}: {v}" for k, v in sorted(counts.items()))
    print(f"[{len(reports)} reports] {summary}", file=sys.stderr)
    failed = any(r.failures for r in reports)
    return FAIL_EXIT if failed else PASS_EXIT


def cmd_enumerate(args) -> int:
    for p in _systems(args, fallback_to_pack=False):
        rep = build_rep(p)
        ball = bfs_ball(rep.gens, radius=args.radius, cap=args.cap)
        print(f"system {p.label()}")
        print(f"radius {args.radius}, cap {args.cap}")
        print("levels: " + ", ".join(str(n) for n in ball.level_sizes))
        if ball.closed:
            print(f"closed: yes, order {ball.order()}")
        elif ball.capped:
            print("closed: no-certificate (element cap exceeded)")
        else:
            print("closed: no-certificate (radius exhausted)")
        print()
    return PASS_EXIT


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="reflect3")
    subs = ap.add_subparsers(dest="command", required=True)

    rep = subs.add_parser("rep", help="print one system's invariants")
    _add_system_flags(rep)
    rep.set_defaults(fn=cmd_rep)

    ver = subs.add_parser("verify", help="run verification suites")
    _add_system_flags(ver)
    ver.add_argument("--suite", default="all",
                     help="suite token, comma list, or 'all'")
    ver.add_argument("--radius", type=int, default=10)
    ver.add_argument("--cap", type=int, default=200_000)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--format", choices=("json", "md"), default="json")
    ver.add_argument("--out", help="write the report here instead of stdout")
    ver.set_defaults(fn=cmd_verify)

    en = subs.add_parser("enumerate", help="grow a group ball")
    _add_system_flags(en)
    en.add_argument("--radius", type=int, default=16)
    en.add_argument("--cap", type=int, default=500_000)
    en.set_defaults(fn=cmd_enumerate)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as err:
        return INPUT_EXIT if err.code else PASS_EXIT
    try:
        return args.fn(args)
    except Reflect3Error as err:
        print(f"error: {err}", file=sys.stderr)
        return INPUT_EXIT
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return INPUT_EXIT


if __name__ == "__main__":
    sys.exit(main())
