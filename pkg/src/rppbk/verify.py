"""Exhaustive and randomized verification suites.

Each suite returns a :class:`Report`; the CLI ``verify-all`` command and the
acceptance tests both drive these with their own scope parameters.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .bkengine import (
    Table12,
    bk12,
    check_local_confluence,
    classical_bk,
    column_class,
    descent_type,
    descents,
    ell,
    flip,
    is_benign,
    normalize,
    random_benign_table,
    resolve,
    seplist,
)
from .bkengine.involutions import _bk_general, _classical_bk, bk12_table
from .gseries import gtilde, schur_poly
from .polynomial import SparsePoly, e_poly, h_poly, monomial, specialize_t, swap_x
from .shapes import SkewShape, connected_components, connected_shapes, parse_skew, skew_shapes, support
from .structure import (
    Classification,
    admissible_partitions,
    classify,
    decompose,
    nr_cells,
    nu_cap,
    nu_subset,
    p_poly,
    q_formula,
    rpps12_by_seplist,
    seplist_partition,
    transposing_maps,
)
from .tableaux import Filling, _monotone, ceq, enumerate_rpps, enumerate_ssyts, ircont, trim

__all__ = [
    "Report",
    "FIXTURES",
    "check_symmetry_suite",
    "check_specializations",
    "check_involutions",
    "check_confluence",
    "check_fixtures",
    "check_classical",
    "check_structure",
    "run_all",
]


@dataclass
class Report:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, what):
        if len(self.failures) < 20:
            self.failures.append(what)
        else:
            self.failures[-1] = "... more failures"

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = "" if self.ok else f"; first failure: {self.failures[0]}"
        return f"{status} {self.name}: {self.checked} checks{tail}"


def _shapes_up_to(max_cells: int, connected: bool = True):
    gen = connected_shapes if connected else skew_shapes
    for n in range(1, max_cells + 1):
        yield from gen(n)


def _scope(max_cells, all_shapes_cells):
    """Connected shapes up to max_cells, then disconnected ones up to all_shapes_cells."""
    yield from _shapes_up_to(max_cells)
    for s in _shapes_up_to(all_shapes_cells, connected=False):
        if len(connected_components(s)) > 1:
            yield s


def _swap(seq, i):
    v = list(seq) + [0] * (i + 1 - len(seq))
    v[i - 1], v[i] = v[i], v[i - 1]
    return trim(v)


def check_symmetry_suite(max_cells: int = 10, nx: int = 3) -> Report:
    rep = Report(f"symmetry in x (connected shapes <= {max_cells} cells, nx={nx})")
    for shape in _shapes_up_to(max_cells):
        p = gtilde(shape, nx)
        for i in range(1, nx):
            rep.checked += 1
            if swap_x(p, i) != p:
                rep.fail(f"{shape} not invariant under swapping x{i}, x{i + 1}")
    return rep


def check_specializations(max_cells: int = 10, nx: int = 3, closed_max_n: int = 5) -> Report:
    rep = Report(f"t=0 and t=1 specializations (connected shapes <= {max_cells} cells, nx={nx})")
    for shape in _shapes_up_to(max_cells):
        p = gtilde(shape, nx)
        rep.checked += 2
        if specialize_t(p, 0) != schur_poly(shape, nx, method="enumerate"):
            rep.fail(f"{shape}: t=0 differs from the SSYT sum")
        if specialize_t(p, 1) != _g_by_enumeration(shape, nx):
            rep.fail(f"{shape}: t=1 differs from the rpp sum of x^ircont")
    for n in range(1, closed_max_n + 1):
        for k in range(1, nx + 1):
            rep.checked += 2
            if gtilde(SkewShape((n,)), k) != h_poly(n, k):
                rep.fail(f"single row of {n}, nx={k}: not h_{n}")
            if gtilde(SkewShape((1,) * n), k) != e_poly(n, k, t_first=n - 1):
                rep.fail(f"single column of {n}, nx={k}: not e_{n}(t, x)")
    return rep


def _g_by_enumeration(shape, nx) -> SparsePoly:
    return SparsePoly(Counter((ircont(f), ()) for f in enumerate_rpps(shape, nx)))


def check_involutions(max_cells: int = 8, max_entry: int = 4, all_shapes_cells: int = 0) -> Report:
    """B_i is an involution preserving ceq and transposing ircont at (i, i+1).

    Connected shapes are covered up to ``max_cells``; shapes with several
    components are covered up to ``all_shapes_cells``.
    """
    rep = Report(
        f"B_i contract (connected shapes <= {max_cells} cells, all shapes <= {all_shapes_cells}, "
        f"entries <= {max_entry})"
    )
    for shape in _scope(max_cells, all_shapes_cells):
        for f in enumerate_rpps(shape, max_entry):
            ir, cq = ircont(f), ceq(f)
            for i in range(1, max_entry):
                rep.checked += 1
                g = _bk_general(f, i)
                if not _is_rpp_fast(g) or _bk_general(g, i) != f or ceq(g) != cq or ircont(g) != _swap(ir, i):
                    rep.fail(f"{shape} i={i} rows={f.rows()}")
    return rep


def _is_rpp_fast(f: Filling) -> bool:
    return _monotone(f.entries, False)


def check_confluence(samples: int = 10_000, max_cells: int = 12, seed: int = 7, random_orders: int = 20) -> Report:
    """Random benign tables normalize identically under every resolution order."""
    rep = Report(f"confluence ({samples} random benign tables, shapes <= {max_cells} cells, seed {seed})")
    rng = random.Random(seed)
    pool = list(_shapes_up_to(max_cells))
    for k in range(samples):
        shape = rng.choice(pool)
        t = random_benign_table(shape.cells, rng)
        rep.checked += 1
        if not is_benign(t):
            rep.fail(f"generator produced a non-benign table on {shape}")
            continue
        trace: list = []
        target = normalize(t, "min", trace=trace)
        if descents(target):
            rep.fail(f"normal form still has descents: {t.columns}")
        # replay the trace checking the potential and the invariants step by step
        prev = t
        for move, state in trace:
            if not ell(state) < ell(prev) or seplist(state) != seplist(prev):
                rep.fail(f"step {move} broke ell/seplist on {t.columns}")
            if _stats(state) != _stats(prev):
                rep.fail(f"step {move} changed ceq/ircont on {t.columns}")
            prev = state
        if normalize(t, "max") != target:
            rep.fail(f"max-first differs on {t.columns}")
        for q in range(random_orders):
            if normalize(t, "random", seed=f"{seed}:{k}:{q}") != target:
                rep.fail(f"random order {q} differs on {t.columns}")
        if not check_local_confluence(t):
            rep.fail(f"one-step successors do not join on {t.columns}")
    return rep


def _stats(t: Table12):
    f = Filling._trusted(t.entries)
    return ceq(f), ircont(f)


# Worked examples with known answers, written as (shape, rows) where each
# row lists only that row's cells from left to right.
FIXTURES = {
    "ell_table": ("6,4,4,2/2,1", [[1, 2, 1, 2], [1, 1, 2], [2, 1, 1, 2], [2, 2]]),
    "ell_table_not_benign": ("6,4,4,2/2,1", [[1, 1, 1, 2], [1, 2, 1], [2, 1, 2, 2], [2, 2]]),
    "seplist_table": ("5,5,3,3/2,1", [[1, 1, 1], [2, 1, 1, 2], [1, 2, 1], [2, 2, 2]]),
    "resolution_P": ("5,4,3,3,1/2,1", [[1, 2, 1], [1, 1, 2], [2, 1, 1], [2, 2, 1], [2]]),
    "resolution_P_res1": ("5,4,3,3,1/2,1", [[1, 2, 1], [2, 1, 2], [1, 2, 1], [2, 2, 1], [2]]),
    "resolution_P_res2": ("5,4,3,3,1/2,1", [[1, 2, 1], [1, 1, 2], [2, 1, 1], [2, 1, 2], [2]]),
    "resolution_P_res4": ("5,4,3,3,1/2,1", [[1, 1, 2], [1, 1, 1], [2, 1, 1], [2, 2, 1], [2]]),
    "sst12": ("9,8,7,2,1/8,5,3", [[1], [1, 1, 2], [1, 2, 2, 2], [1, 2], [2]]),
    "sst12_flip": ("9,8,7,2,1/8,5,3", [[2], [1, 1, 1], [2, 1, 2, 2], [1, 1], [2]]),
    "sst12_bk": ("9,8,7,2,1/8,5,3", [[2], [1, 1, 1], [1, 2, 2, 2], [1, 1], [2]]),
    "classical": ("7,6,4,1/3", [[1, 1, 2, 2], [1, 2, 2, 2, 3, 3], [3, 3, 5, 6], [4]]),
    "classical_image_2": ("7,6,4,1/3", [[1, 1, 2, 3], [1, 2, 2, 3, 3, 3], [2, 3, 5, 6], [4]]),
    "structure_T1": ("7,7,7,4,4/5,3,2", [[1, 2], [1, 1, 1, 2], [1, 1, 1, 2, 2], [1, 2, 2, 2], [2, 2, 2, 2]]),
    "structure_T2": ("7,7,7,4,4/5,3,2", [[1, 1], [1, 1, 1, 1], [1, 1, 1, 1, 2], [1, 1, 2, 2], [1, 2, 2, 2]]),
}


def fixture(name: str) -> Filling:
    shape, rows = FIXTURES[name]
    return Filling.from_rows(parse_skew(shape), rows)


def fixture_table(name: str) -> Table12:
    return Table12.from_filling(fixture(name))


def check_fixtures() -> Report:
    rep = Report("worked examples")

    def expect(label, got, want):
        rep.checked += 1
        if got != want:
            rep.fail(f"{label}: got {got!r}, want {want!r}")

    t = fixture_table("ell_table")
    expect("ell", ell(t), 18)
    expect("descents of the ell table", descents(t), [1, 4])
    expect("column 2 class", column_class(t, 2).value, "mixed")
    expect("column 3 class", column_class(t, 3).value, "1-pure")
    expect("ell table benign", is_benign(t), True)
    expect("modified ell table benign", is_benign(fixture_table("ell_table_not_benign")), False)
    expect("seplist", seplist(fixture_table("seplist_table")), (4, 4, 2))

    p = fixture_table("resolution_P")
    expect("descents of P", descents(p), [1, 2, 4])
    expect("descent types of P", [descent_type(p, k).value for k in (1, 2, 4)], ["2M", "M1", "21"])
    for k in (1, 2, 4):
        expect(f"res_{k} P", resolve(p, k), fixture_table(f"resolution_P_res{k}"))
        expect(f"res_{k} flip res_{k} P", resolve(flip(resolve(p, k)), k), flip(p))

    s = fixture_table("sst12")
    expect("flip of the 12-sst", flip(s), fixture_table("sst12_flip"))
    expect("B of the 12-sst", bk12_table(s), fixture_table("sst12_bk"))
    expect("B via fillings", bk12(fixture("sst12")), fixture("sst12_bk"))
    expect("classical BK_2", classical_bk(fixture("classical"), 2), fixture("classical_image_2"))

    t1, t2 = fixture("structure_T1"), fixture("structure_T2")
    expect("NR(T1)", nr_cells(t1), frozenset({(4, 1), (3, 3), (3, 4), (2, 6)}))
    expect("NR(T2)", nr_cells(t2), frozenset({(4, 2), (3, 3), (3, 4), (2, 7)}))
    expect("seplist(T1)", seplist_partition(t1), (4, 3, 3, 2))
    expect("seplist(T2)", seplist_partition(t2), (4, 3, 3, 2))
    shape = parse_skew("7,7,7,4,4/5,3,2")
    nu = (4, 3, 3, 2)
    expect("supp(3)", support(shape, 3), range(3, 5))
    expect("supp(2)", support(shape, 2), range(4, 8))
    expect("supp(4)", support(shape, 4), range(1, 5))
    expect("nu|[2,7)", nu_subset(nu, shape, 2, 7), (3, 3))
    expect("nu|[2,8)", nu_subset(nu, shape, 2, 8), (3, 3, 2))
    expect("nu|[4,8)", nu_subset(nu, shape, 4, 8), (2,))
    expect("nu cap [4,5)", nu_cap(nu, shape, 4, 5), (4, 3, 3, 2))
    expect("nu|[3,5)", nu_subset(nu, shape, 3, 5), (3, 3))
    expect("classification", classify(nu, shape), Classification.REDUCIBLE)
    dec = decompose(nu, shape)
    expect("r", dec.r, 1)
    expect("b_0, b_1", dec.b, (1, 5))
    expect("a_1, a_2", dec.a, (3, 8))
    expect("components", dec.components, ((4,), (2,)))
    expect("degrees", dec.degrees, (1, 2))
    return rep


def check_classical(max_cells: int = 8, max_entry: int = 4, all_shapes_cells: int = 0) -> Report:
    """The classical move agrees with B_i on SSYTs (same shape scope as check_involutions)."""
    rep = Report(
        f"classical BK_i equals B_i (connected shapes <= {max_cells} cells, all shapes <= {all_shapes_cells}, "
        f"entries <= {max_entry})"
    )
    rep.checked += 1
    if classical_bk(fixture("classical"), 2) != fixture("classical_image_2"):
        rep.fail("worked classical example")
    for shape in _scope(max_cells, all_shapes_cells):
        for f in enumerate_ssyts(shape, max_entry):
            for i in range(1, max_entry):
                rep.checked += 1
                if _classical_bk(f, i) != _bk_general(f, i):
                    rep.fail(f"{shape} i={i} rows={f.rows()}")
    return rep


def check_structure(max_cells: int = 12, max_cols: int = 6, max_extra: int = 1) -> tuple[Report, Report]:
    """Seplist classes against the closed form, plus uniqueness of the transposing map.

    Admissible partitions are enumerated up to length ncols + 1 with each
    row repeated at most |supp| + max_extra times; anything longer is
    non-representable by counting alone.
    """
    rep = Report(f"12-rpp structure (connected shapes <= {max_cells} cells, <= {max_cols} columns)")
    uniq = Report("unique ircont-transposing map on irreducible classes (same shapes)")
    for shape in _shapes_up_to(max_cells):
        if shape.ncols > max_cols:
            continue
        groups = rpps12_by_seplist(shape)
        seen = set()
        for nu in admissible_partitions(shape, shape.ncols + 1, max_extra):
            rep.checked += 1
            kind = classify(nu, shape)
            members = groups.get(nu, [])
            if kind is Classification.NON_REPRESENTABLE:
                if members:
                    rep.fail(f"{shape} nu={nu}: non-representable but realized")
                continue
            seen.add(nu)
            poly = SparsePoly(Counter((ircont(f), ()) for f in members))
            if poly != q_formula(nu, shape):
                rep.fail(f"{shape} nu={nu}: class sum {poly} != closed form")
            if kind is Classification.IRREDUCIBLE:
                if len(members) != shape.ncols - len(nu) + 1:
                    rep.fail(f"{shape} nu={nu}: {len(members)} members")
                m = len(nu)
                if poly != monomial((m, m)) * p_poly(shape.ncols - m):
                    rep.fail(f"{shape} nu={nu}: class sum is not (x1x2)^{m} P_{shape.ncols - m}")
                uniq.checked += 1
                maps = transposing_maps(members)
                if len(maps) != 1:
                    uniq.fail(f"{shape} nu={nu}: {len(maps)} transposing maps")
                elif any(bk12(members[k]) != members[j] for k, j in maps[0].items()):
                    uniq.fail(f"{shape} nu={nu}: the transposing map is not B")
        if seen != set(groups):
            rep.fail(f"{shape}: realized partitions {sorted(set(groups) - seen)} were not enumerated")
    return rep, uniq


def run_all(max_cells: int = 8, nx: int = 3, seed: int = 7, samples: int = 1000) -> list[Report]:
    """A scaled-down pass over every suite."""
    entries = max(nx, 2)
    reports = [
        check_symmetry_suite(max_cells, nx),
        check_specializations(max_cells, nx, closed_max_n=min(max_cells, 5)),
        check_involutions(max_cells, entries, all_shapes_cells=min(max_cells, 5)),
        check_confluence(samples, max_cells, seed),
        check_fixtures(),
        check_classical(max_cells, entries, all_shapes_cells=min(max_cells, 5)),
    ]
    reports.extend(check_structure(max_cells, max_cols=min(max_cells, 6)))
    return reports
