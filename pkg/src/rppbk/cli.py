"""Command-line front end: ``rppbk <command> [options]``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage or
parse errors.  Randomized commands default to seed 7.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .bkengine import (
    Table12,
    bk_general,
    check_local_confluence,
    descents,
    ell,
    is_benign,
    normalize,
    random_benign_table,
)
from .errors import RppbkError
from .gseries import g_poly, gtilde, schur_poly
from .polynomial import ONE, SparsePoly
from .shapes import SkewShape, _components, parse_skew, restrict_columns
from .structure import Classification, classify, decompose, q_formula, rpps12_by_seplist
from .tableaux import Filling, ceq, ircont, is_rpp
from .verify import run_all

DEFAULT_SEED = 7


class UsageError(Exception):
    pass


def _shape(text) -> SkewShape:
    if text is None:
        raise UsageError("--shape is required")
    return parse_skew(text)


def _nu(text) -> tuple[int, ...]:
    if text is None:
        raise UsageError("--nu is required")
    text = text.strip().strip("()")
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--nu: cannot parse {text!r}") from exc


def _emit_poly(p: SparsePoly, as_json: bool):
    print(json.dumps(p.to_json()) if as_json else str(p))


def cmd_gtilde(args) -> int:
    shape = _shape(args.shape)
    if args.t0:
        p = schur_poly(shape, args.nx)
    elif args.t1:
        p = g_poly(shape, args.nx)
    else:
        p = gtilde(shape, args.nx)
    _emit_poly(p, args.json)
    return 0


def cmd_schur(args) -> int:
    _emit_poly(schur_poly(_shape(args.shape), args.nx), args.json)
    return 0


def _read_rpp(path, shape_text) -> Filling:
    if path is None:
        raise UsageError("--rpp is required")
    with open(path) as fh:
        text = fh.read()
    stripped = text.strip()
    if stripped.startswith("{"):
        return Filling.from_json(json.loads(stripped))
    # plain text: one row per line, listing only that row's cells
    rows = [[int(v) for v in line.split()] for line in stripped.splitlines()]
    return Filling.from_rows(_shape(shape_text), rows)


def cmd_bk(args) -> int:
    f = _read_rpp(args.rpp, args.shape)
    if args.i is None:
        raise UsageError("--i is required")
    g = bk_general(f, args.i)
    before = {"ceq": ceq(f), "ircont": ircont(f)}
    after = {"ceq": ceq(g), "ircont": ircont(g)}
    if args.json:
        print(json.dumps({"image": g.to_json(), "before": before, "after": after}))
    else:
        print(g)
        for key in ("ceq", "ircont"):
            print(f"{key}: {before[key]} -> {after[key]}")
    if args.verify:
        want = list(before["ircont"]) + [0] * (args.i + 1)
        want[args.i - 1], want[args.i] = want[args.i], want[args.i - 1]
        while want and want[-1] == 0:
            want.pop()
        checks = {
            "rpp": is_rpp(g),
            "ceq preserved": after["ceq"] == before["ceq"],
            "ircont transposed": after["ircont"] == tuple(want),
            "involution": bk_general(g, args.i) == f,
        }
        for name, ok in checks.items():
            print(f"{'PASS' if ok else 'FAIL'} {name}")
        return 0 if all(checks.values()) else 1
    return 0


def cmd_confluence(args) -> int:
    rng = random.Random(args.seed)
    if args.rpp is not None:
        tables = [Table12.from_filling(_read_rpp(args.rpp, args.shape))]
    else:
        shape = _shape(args.shape)
        tables = [random_benign_table(shape.cells, rng) for _ in range(args.samples)]
    bad = 0
    for k, t in enumerate(tables):
        if not is_benign(t):
            print(f"table {k}: not benign")
            return 2
        results = {normalize(t, "min"), normalize(t, "max")}
        results |= {normalize(t, "random", seed=f"{args.seed}:{k}:{q}") for q in range(20)}
        joined = check_local_confluence(t)
        if len(results) != 1 or not joined:
            bad += 1
            print(f"table {k}: {len(results)} normal forms, local confluence {joined}")
    if args.rpp is not None:
        t = tables[0]
        n = normalize(t, args.strategy, seed=args.seed)
        print(f"descents {descents(t)}; ell {ell(t)} -> {ell(n)}")
        print(n)
    print(f"{len(tables) - bad}/{len(tables)} tables normalize uniquely")
    return 1 if bad else 0


def _q_summary(dec) -> str:
    factors = [f"(x1x2)^{dec.M}"] + [f"P{n}" for n in dec.degrees]
    return "Q=" + "·".join(factors)


def _structure_one(shape, nu, check: bool, as_json: bool, label: str = ""):
    kind = classify(nu, shape)
    if kind is Classification.NON_REPRESENTABLE:
        summary = {"classification": kind.value, "q": "0"}
        line = f"{label}{kind.value}; Q=0"
        poly = SparsePoly()
        dec = None
    else:
        dec = decompose(nu, shape)
        poly = q_formula(nu, shape)
        comps = ",".join("(" + ",".join(map(str, c)) + ")" for c in dec.components)
        degrees = ",".join(map(str, dec.degrees))
        line = f"{label}{kind.value}; components {comps}; degrees {degrees}; {_q_summary(dec)}"
        summary = {
            "classification": kind.value,
            "a": list(dec.a),
            "b": list(dec.b),
            "r": dec.r,
            "components": [list(c) for c in dec.components],
            "degrees": list(dec.degrees),
            "M": dec.M,
            "q": poly.to_json(),
        }
    ok = True
    if check:
        members = rpps12_by_seplist(shape).get(tuple(nu), [])
        counted = SparsePoly({})
        for f in members:
            counted = counted + SparsePoly({(ircont(f), ()): 1})
        ok = counted == poly
        summary["check"] = {"tableaux": len(members), "match": ok}
    return line, summary, poly, dec, ok


def cmd_structure(args) -> int:
    shape = _shape(args.shape)
    nu = _nu(args.nu)
    parts = _component_parts(shape)
    leftover = [i for i in nu if not any(lo <= i < hi for _, (lo, hi) in parts)]
    if leftover:
        raise UsageError(f"--nu entries {leftover} do not index a pair of rows inside one component")
    if len(parts) == 1:
        piece, _ = parts[0]
        line, summary, poly, dec, ok = _structure_one(piece, nu, args.check, args.json)
        if args.json:
            print(json.dumps(summary))
        else:
            print(line)
            if dec is not None:
                print(f"b = {dec.b}; a = {dec.a}; r = {dec.r}")
            print(f"Q = {poly}")
            if args.check:
                verdict = "matches" if ok else "DOES NOT match"
                print(f"enumeration over {summary['check']['tableaux']} tableaux {verdict} Q")
        return 0 if ok else 1
    # components share no rows or columns, so the class sum is a product
    total, ok_all, summaries = ONE, True, []
    for k, (piece, (lo, hi)) in enumerate(parts):
        sub_nu = tuple(i for i in nu if lo <= i < hi)
        line, summary, poly, _, ok = _structure_one(piece, sub_nu, args.check, args.json, f"component {k + 1} ({piece}): ")
        total = total * poly
        ok_all = ok_all and ok
        summaries.append(summary)
        if not args.json:
            print(line)
    if args.json:
        print(json.dumps({"components": summaries, "q": total.to_json()}))
    else:
        print(f"Q = {total}")
    return 0 if ok_all else 1


def _component_parts(shape: SkewShape) -> list[tuple[SkewShape, tuple[int, int]]]:
    """Each component on its own columns (renumbered from 1) and original rows, with its row range [first, last)."""
    out = []
    for comp in sorted(_components(shape.cells), key=lambda c: min(j for _, j in c)):
        cols = [j for _, j in comp]
        rows = [i for i, _ in comp]
        piece = restrict_columns(shape, min(cols), max(cols) + 1, keep_rows=True)
        out.append((piece, (min(rows), max(rows))))
    return out


def cmd_verify_all(args) -> int:
    reports = run_all(args.max_cells, args.nx, args.seed, args.samples)
    for rep in reports:
        print(rep.line())
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rppbk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, nx=True):
        p.add_argument("--shape", help='skew shape such as "7,7,7,4,4/5,3,2"')
        if nx:
            p.add_argument("--nx", type=int, default=3, help="number of x variables (entries 1..nx)")
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("gtilde", help="refined generating polynomial over rpps")
    common(p)
    spec = p.add_mutually_exclusive_group()
    spec.add_argument("--t0", action="store_true", help="set every t to 0")
    spec.add_argument("--t1", action="store_true", help="set every t to 1")
    p.set_defaults(run=cmd_gtilde)

    p = sub.add_parser("schur", help="skew Schur polynomial")
    common(p)
    p.set_defaults(run=cmd_schur)

    p = sub.add_parser("bk", help="apply B_i to an rpp read from a file")
    common(p, nx=False)
    p.add_argument("--rpp", help="JSON filling, or text rows (with --shape)")
    p.add_argument("--i", type=int)
    p.add_argument("--verify", action="store_true", help="check the statistics contract")
    p.set_defaults(run=cmd_bk)

    p = sub.add_parser("confluence", help="check order independence of descent resolution")
    common(p, nx=False)
    p.add_argument("--rpp", help="a single benign 12-table instead of random ones")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--strategy", choices=["min", "max", "random"], default="min")
    p.set_defaults(run=cmd_confluence)

    p = sub.add_parser("structure", help="classify and decompose a seplist partition")
    common(p, nx=False)
    p.add_argument("--nu", help='partition such as "4,3,3,2"')
    p.add_argument("--check", action="store_true", help="compare with enumeration")
    p.set_defaults(run=cmd_structure)

    p = sub.add_parser("verify-all", help="run every verification suite at reduced scale")
    p.add_argument("--max-cells", type=int, default=8)
    p.add_argument("--nx", type=int, default=3)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=1000, help="random tables for the confluence suite")
    p.set_defaults(run=cmd_verify_all)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args)
    except (UsageError, RppbkError, OSError, ValueError, KeyError) as exc:
        print(f"rppbk {args.command}: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
