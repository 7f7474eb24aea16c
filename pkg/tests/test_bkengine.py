import random
from collections import Counter

import pytest
from hypothesis import assume, given, strategies as st

import oracles
from rppbk.bkengine import (
    ColumnClass,
    DescentType,
    Table12,
    bk12,
    bk12_table,
    bk_general,
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
    sep,
    seplist,
    sig,
)
from rppbk.bkengine.rewriting import all_normal_forms, local_confluence_failures, normal_form
from rppbk.bkengine.table import RESOLUTION
from rppbk.errors import NotADescent, NotAnRpp, NotAnSsyt, NotATable, NotBenign, NotMixed, TerminationError
from rppbk.shapes import SkewShape, connected_shapes, skew_shapes
from rppbk.structure import seplist_partition
from rppbk.tableaux import Filling, ceq, enumerate_rpps, enumerate_ssyts, ircont, is_rpp, is_ssyt
from rppbk.verify import fixture, fixture_table
from strategies import rpps, skew_shapes as st_shapes, ssyts


def stats(t):
    f = Filling(t.entries)
    return ceq(f), ircont(f)


def swapped(seq, i):
    v = list(seq) + [0] * (i + 1)
    v[i - 1], v[i] = v[i], v[i - 1]
    while v and v[-1] == 0:
        v.pop()
    return tuple(v)


def oracle_seplist(entries):
    cols = sorted({j for _, j in entries})
    out = []
    for j in cols:
        vals = {v for (i, c), v in entries.items() if c == j}
        if vals == {1, 2}:
            out.append(min(i for (i, c), v in entries.items() if c == j and v == 2))
    return tuple(out)


@st.composite
def benign_tables(draw, max_cells=10):
    shape = draw(st_shapes(max_parts=5, max_part=5, max_cells=max_cells))
    assume(shape.size > 0)
    if draw(st.booleans()):
        return random_benign_table(shape.cells, random.Random(draw(st.integers(0, 2**32))))
    # arbitrary column contents, kept only when benign
    cols = []
    for c, (top, bot) in sorted(shape.column_spans.items()):
        cols.append((c, top, bot, draw(st.integers(0, bot - top + 1))))
    t = Table12(tuple(cols))
    assume(is_benign(t))
    return t


# worked examples


def test_ell_table_statistics():
    t = fixture_table("ell_table")
    assert ell(t) == 18
    assert column_class(t, 2) is ColumnClass.MIXED
    assert column_class(t, 3) is ColumnClass.ONE_PURE
    assert column_class(t, 99) is ColumnClass.EMPTY
    assert descents(t) == [1, 4]
    assert is_benign(t)
    assert not is_benign(fixture_table("ell_table_not_benign"))


def test_sig_values():
    assert [sig(c) for c in ColumnClass] == [0, 2, 0, 1]


def test_sep_and_seplist():
    t = fixture_table("seplist_table")
    assert sep(t, 1) == 4 and sep(t, 5) == 2
    assert seplist(t) == (4, 4, 2)
    with pytest.raises(NotMixed):
        sep(t, 2)
    # the seplist partition records the row of the 1 above each separating 2
    assert seplist(fixture_table("structure_T1")) == (5, 4, 4, 3)
    assert seplist_partition(fixture("structure_T1")) == (4, 3, 3, 2)
    assert seplist(Table12.from_rows(SkewShape((2,)), [[1, 2]])) == ()


def test_ell_trivial_cases():
    assert ell(Table12.from_rows(SkewShape((3, 3)), [[2, 2, 2], [2, 2, 2]])) == 0
    one_pure = Table12(((5, 1, 2, 2),))
    assert ell(one_pure) == 10


def test_resolution_example():
    p = fixture_table("resolution_P")
    assert descents(p) == [1, 2, 4]
    assert descent_type(p, 1) is DescentType.TWO_M
    assert descent_type(p, 2) is DescentType.M1
    assert descent_type(p, 4) is DescentType.TWO_ONE
    for k in (1, 2, 4):
        assert resolve(p, k) == fixture_table(f"resolution_P_res{k}")
        assert resolve(flip(resolve(p, k)), k) == flip(p)
    assert check_local_confluence(p)
    assert len({normalize(p, s, seed=q) for s in ("min", "max", "random") for q in range(5)}) == 1
    assert len(all_normal_forms(RESOLUTION, p)) == 1


def test_sst_example():
    s = fixture_table("sst12")
    assert flip(s) == fixture_table("sst12_flip")
    assert normalize(flip(s)) == fixture_table("sst12_bk")
    assert bk12(fixture("sst12")) == fixture("sst12_bk")


def test_small_bk12_examples():
    row = SkewShape((2,))
    assert bk12(Filling.from_rows(row, [[1, 1]])).rows() == [[2, 2]]
    assert bk12(Filling.from_rows(row, [[1, 2]])).rows() == [[1, 2]]
    assert flip(Table12.from_rows(row, [[1, 2]])) == Table12.from_rows(row, [[2, 1]])


def test_classical_example():
    assert classical_bk(fixture("classical"), 2) == fixture("classical_image_2")
    assert classical_bk(fixture("classical_image_2"), 2) == fixture("classical")
    one_row = Filling.from_rows(SkewShape((2,)), [[3, 3]])
    assert classical_bk(one_row, 3).rows() == [[4, 4]]
    assert classical_bk(one_row, 1) == one_row


def test_errors():
    p = fixture_table("resolution_P")
    with pytest.raises(NotADescent):
        descent_type(p, 3)
    with pytest.raises(NotADescent):
        resolve(p, 3)
    bad = fixture_table("ell_table_not_benign")
    with pytest.raises(NotBenign):
        normalize(bad)
    with pytest.raises(NotBenign):
        check_local_confluence(bad)
    with pytest.raises(NotBenign):
        descent_type(bad, descents(bad)[0])
    with pytest.raises(NotAnRpp):
        bk12(Filling.from_rows(SkewShape((2,)), [[2, 1]]))
    with pytest.raises(NotAnRpp):
        bk_general(Filling.from_rows(SkewShape((2,)), [[3, 1]]), 1)
    with pytest.raises(NotAnSsyt):
        classical_bk(Filling.from_rows(SkewShape((1, 1)), [[1], [1]]), 1)
    with pytest.raises(NotATable):
        Table12.from_entries({(1, 1): 2, (2, 1): 1})
    with pytest.raises(NotATable):
        Table12.from_entries({(1, 1): 3})


# generic rewriting


class AdjacentSwaps:
    """Sort a tuple by swapping adjacent inversions; the inversion count is the potential."""

    def moves(self, s):
        return [k for k in range(len(s) - 1) if s[k] > s[k + 1]]

    def step(self, s, k):
        v = list(s)
        v[k], v[k + 1] = v[k + 1], v[k]
        return tuple(v)

    def potential(self, s):
        return sum(1 for a in range(len(s)) for b in range(a + 1, len(s)) if s[a] > s[b])


class Spinner(AdjacentSwaps):
    def potential(self, s):
        return 0


@given(st.lists(st.integers(0, 5), max_size=7).map(tuple), st.sampled_from(["min", "max", "random"]))
def test_generic_normal_form(s, strategy):
    system = AdjacentSwaps()
    assert normal_form(system, s, strategy, seed=1) == tuple(sorted(s))
    assert local_confluence_failures(system, s) == []
    assert all_normal_forms(system, s) == {tuple(sorted(s))}


def test_termination_guard():
    with pytest.raises(TerminationError):
        normal_form(Spinner(), (2, 1))


def test_trace_records_each_step():
    trace = []
    normal_form(AdjacentSwaps(), (3, 2, 1), trace=trace)
    assert [m for m, _ in trace] == [0, 1, 0]
    assert trace[-1][1] == (1, 2, 3)


# properties of flip and resolution


@given(benign_tables())
def test_generated_tables_are_benign(t):
    assert is_benign(t)
    assert seplist(t) == oracle_seplist(t.entries)
    assert list(seplist(t)) == sorted(seplist(t), reverse=True)


@given(benign_tables())
def test_flip_properties(t):
    f = flip(t)
    assert flip(f) == t
    assert seplist(f) == seplist(t)
    (cq, ir), (cq2, ir2) = stats(t), stats(f)
    assert cq2 == cq
    assert ir2 == swapped(ir, 1)


@given(benign_tables())
def test_resolve_against_cellwise_rules(t):
    for k in descents(t):
        r = resolve(t, k)
        assert r.entries == oracles.resolve_cells(t.entries, k)
        assert seplist(r) == seplist(t)
        assert stats(r) == stats(t)
        assert ell(r) < ell(t)
        assert is_benign(r)
        assert resolve(flip(r), k) == flip(t)


@given(benign_tables())
def test_descents_against_cell_scan(t):
    assert descents(t) == oracles.descents_cells(t.entries)


@given(benign_tables(max_cells=9))
def test_every_order_reaches_one_normal_form(t):
    finals = oracles.every_normal_form(t.entries)
    assert len(finals) == 1
    (only,) = finals
    for strategy in ("min", "max", "random"):
        n = normalize(t, strategy, seed=3)
        assert frozenset(n.entries.items()) == only
        assert is_rpp(Filling(n.entries))
    assert check_local_confluence(t)


@given(benign_tables())
def test_ell_drops_along_the_trace(t):
    trace = []
    normalize(t, "random", seed=11, trace=trace)
    levels = [ell(t)] + [ell(s) for _, s in trace]
    assert all(a > b for a, b in zip(levels, levels[1:]))


@pytest.mark.parametrize("n", range(1, 7))
def test_rpps_are_benign_and_descent_free(n):
    for shape in connected_shapes(n):
        for f in enumerate_rpps(shape, 2):
            t = Table12.from_filling(f)
            assert is_benign(t) and descents(t) == []
            assert normalize(t) == t


# involutions


@pytest.mark.parametrize("n", range(1, 8))
def test_bk12_contract_exhaustive(n):
    for shape in skew_shapes(n):
        for f in enumerate_rpps(shape, 2):
            g = bk12(f)
            assert is_rpp(g)
            assert bk12(g) == f
            assert ceq(g) == ceq(f)
            assert ircont(g) == swapped(ircont(f), 1)


@given(rpps(max_entry=5), st.integers(1, 4))
def test_bk_general_contract(f, i):
    g = bk_general(f, i)
    assert is_rpp(g)
    assert bk_general(g, i) == f
    assert ceq(g) == ceq(f)
    assert ircont(g) == swapped(ircont(f), i)
    # only the cells holding i or i+1 move, and they keep holding i or i+1
    touched = {c for c, v in f.entries.items() if v in (i, i + 1)}
    assert {c for c, v in g.entries.items() if v in (i, i + 1)} == touched
    assert all(g[c] == f[c] for c in f.domain - touched)


@given(rpps(max_entry=2))
def test_bk_general_at_one_is_bk12(f):
    assert bk_general(f, 1) == bk12(f)


@given(rpps(max_entry=3))
def test_bk_general_ignores_absent_values(f):
    assert bk_general(f, 4) == f


@given(rpps(max_entry=4, max_parts=6, max_part=6), st.integers(1, 3))
def test_bk_general_acts_componentwise(f, i):
    g = bk_general(f, i)
    for comp in oracles.edge_components(f.domain):
        piece = Filling({c: f[c] for c in comp})
        assert bk_general(piece, i).entries == {c: g[c] for c in comp}


def test_bk_general_on_a_non_skew_convex_set():
    # a convex set that is not a skew diagram in its own coordinates still works
    f = Filling({(1, 2): 1, (1, 3): 2, (2, 2): 2})
    g = bk_general(f, 1)
    assert bk_general(g, 1) == f
    assert ircont(g) == swapped(ircont(f), 1)


@given(ssyts(max_entry=5), st.integers(1, 4))
def test_classical_matches_general_and_oracle(f, i):
    g = classical_bk(f, i)
    assert is_ssyt(g)
    assert g == bk_general(f, i)
    assert g.entries == oracles.classical_bk_cells(f.entries, i)
    assert classical_bk(g, i) == f


@pytest.mark.parametrize("n", range(1, 7))
def test_classical_matches_general_exhaustive(n):
    for shape in skew_shapes(n):
        for f in enumerate_ssyts(shape, 4):
            for i in (1, 2, 3):
                assert classical_bk(f, i) == bk_general(f, i)


def test_random_benign_tables_cover_all_classes():
    rng = random.Random(5)
    seen = Counter()
    shape = SkewShape((4, 4, 4), (1,))
    for _ in range(300):
        t = random_benign_table(shape.cells, rng)
        assert is_benign(t)
        seen.update(column_class(t, k) for k in range(1, 5))
    assert {ColumnClass.ONE_PURE, ColumnClass.TWO_PURE, ColumnClass.MIXED} <= set(seen)


def test_bk12_table_cache_is_consistent():
    t = fixture_table("sst12")
    assert bk12_table(t) is bk12_table(Table12(t.columns))
