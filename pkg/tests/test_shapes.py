import pytest
from hypothesis import given

from oracles import cells_of, connected_diagrams, convex, edge_components, normalized
from rppbk.errors import EmptyRestriction, NotAPartition, NotContained, ParseError
from rppbk.shapes import (
    SkewShape,
    connected_components,
    connected_shapes,
    is_connected,
    is_convex,
    parse_skew,
    restrict_columns,
    shape_from_cells,
    skew_shapes,
    support,
)
from strategies import skew_shapes as st_shapes

RUNNING = "7,7,7,4,4/5,3,2"


def test_parse_skew_cells():
    assert parse_skew("3,2,2/1").cells == {(1, 2), (1, 3), (2, 1), (2, 2), (3, 1), (3, 2)}
    assert parse_skew("2,1").cells == {(1, 1), (1, 2), (2, 1)}
    assert parse_skew("2,1").mu == ()


@pytest.mark.parametrize(
    "text, error",
    [("1/2", NotContained), ("1,2", NotAPartition), ("3,x", ParseError), ("", ParseError), ("2//1", ParseError)],
)
def test_parse_skew_rejects(text, error):
    with pytest.raises(error):
        parse_skew(text)


def test_str_round_trip():
    s = parse_skew(RUNNING)
    assert str(s) == RUNNING
    assert parse_skew(str(s)) == s
    assert SkewShape.from_json(s.to_json()) == s
    assert s.to_json() == {"lambda": [7, 7, 7, 4, 4], "mu": [5, 3, 2]}


def test_equality_is_by_diagram():
    assert SkewShape((3, 1, 1), (2, 1)) == SkewShape((3, 2, 1), (2, 2))
    assert hash(SkewShape((3, 1, 1), (2, 1))) == hash(SkewShape((3, 2, 1), (2, 2)))


def test_support_examples():
    s = parse_skew(RUNNING)
    assert support(s, 3) == range(3, 5)
    assert support(s, 2) == range(4, 8)
    assert len(support(SkewShape((1,)), 1)) == 0


def test_is_convex_examples():
    assert is_convex(parse_skew("3,2,2/1").cells)
    assert not is_convex({(1, 1), (2, 2)})
    assert is_convex(set())


def test_connected_components_examples():
    assert connected_components(parse_skew(RUNNING)) == [parse_skew(RUNNING)]
    assert connected_components(SkewShape((2, 1), (1,))) == [SkewShape((1,)), SkewShape((1,))]
    assert connected_components(SkewShape(())) == []


def test_restrict_columns_examples():
    s = parse_skew(RUNNING)
    left = restrict_columns(s, 1, 3)
    right = restrict_columns(s, 5, 8)
    assert left == SkewShape((2, 2))
    assert right.cells == shape_from_cells({(i, j - 4) for i, j in s.cells if j >= 5}).cells
    assert right == SkewShape((3, 3, 3), (1,))
    assert restrict_columns(s, 1, 8) == s
    with pytest.raises(EmptyRestriction):
        restrict_columns(SkewShape((3, 1), (2,)), 2, 3)


def test_restrict_columns_keeping_rows():
    s = parse_skew(RUNNING)
    assert restrict_columns(s, 1, 3, keep_rows=True).cells == {(4, 1), (4, 2), (5, 1), (5, 2)}


@given(st_shapes())
def test_cells_match_definition(shape):
    assert shape.cells == cells_of(shape.lam, shape.mu)
    assert shape.size == sum(shape.lam) - sum(shape.mu)
    assert is_convex(shape.cells)


@given(st_shapes())
def test_support_brute_force(shape):
    for i in range(1, shape.nrows + 2):
        expected = {j for (r, j) in shape.cells if r == i and (i + 1, j) in shape.cells}
        assert set(support(shape, i)) == expected


@given(st_shapes())
def test_components_partition_the_shape(shape):
    pieces = connected_components(shape)
    oracle = edge_components(shape.cells)
    assert len(pieces) == len(oracle)
    assert sorted(p.size for p in pieces) == sorted(len(c) for c in oracle)
    assert {normalized(c) for c in oracle} == {normalized(p.cells) for p in pieces}
    for p in pieces:
        assert is_connected(p) and is_convex(p.cells)
    assert is_connected(shape) == (len(oracle) == 1)


@given(st_shapes(max_parts=5, max_part=6))
def test_convexity_against_brute_force(shape):
    cells = set(shape.cells)
    assert is_convex(cells) == convex(cells)
    if cells:
        # knock out one interior cell and compare again
        victim = sorted(cells)[len(cells) // 2]
        assert is_convex(cells - {victim}) == convex(cells - {victim})


@pytest.mark.parametrize("n", range(1, 7))
def test_connected_shapes_against_polyominoes(n):
    generated = [normalized(s.cells) for s in connected_shapes(n)]
    assert len(generated) == len(set(generated))
    assert set(generated) == connected_diagrams(n)


def test_skew_shapes_counts():
    # ordered tuples of connected pieces: sum over compositions of n
    conn = {k: sum(1 for _ in connected_shapes(k)) for k in range(1, 6)}
    total = {0: 1}
    for n in range(1, 6):
        total[n] = sum(conn[k] * total[n - k] for k in range(1, n + 1))
        assert sum(1 for _ in skew_shapes(n)) == total[n]
    assert [conn[k] for k in range(1, 6)] == [1, 2, 4, 9, 20]


@given(st_shapes())
def test_shape_from_cells_round_trip(shape):
    if shape.cells:
        assert normalized(shape_from_cells(shape.cells).cells) == normalized(shape.cells)
