"""Partitions, skew shapes and finite cell sets.

Coordinates are 1-based in matrix (English) convention: cell ``(1, 1)`` is
the top-left corner and ``(2, 1)`` sits directly below it.  A cell is a
plain ``(row, col)`` tuple and a cell set is a ``frozenset`` of them.

Column intervals are half-open Python ``range`` objects, so the closed
interval ``[3, 4]`` of columns is ``range(3, 5)``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import EmptyRestriction, NotAPartition, NotContained, ParseError

Cell = tuple[int, int]
CellSet = frozenset

__all__ = [
    "Cell",
    "CellSet",
    "SkewShape",
    "as_partition",
    "parse_skew",
    "shape_from_cells",
    "support",
    "is_convex",
    "is_connected",
    "connected_components",
    "restrict_columns",
    "connected_shapes",
    "skew_shapes",
]


def as_partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Validate a weakly decreasing list of naturals and drop trailing zeros."""
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise NotAPartition(f"negative part in {parts}")
    if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
        raise NotAPartition(f"parts increase in {parts}")
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


@dataclass(frozen=True, eq=False)
class SkewShape:
    """The skew diagram lambda/mu.

    Two shapes compare equal when their diagrams (cell sets) coincide, so
    ``(3,1,1)/(2,1)`` equals ``(3,2,1)/(2,2)``.  The stored ``lam``/``mu``
    still fix the row numbering used by :func:`support` and the t-variables.
    """

    lam: tuple[int, ...]
    mu: tuple[int, ...] = ()

    def __post_init__(self):
        lam = as_partition(self.lam)
        mu = as_partition(self.mu)
        if len(mu) > len(lam) or any(m > lam[i] for i, m in enumerate(mu)):
            raise NotContained(f"{_fmt(mu)} is not contained in {_fmt(lam)}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    def lam_(self, i: int) -> int:
        """lambda_i with the convention lambda_i = 0 beyond the stored parts."""
        return self.lam[i - 1] if 1 <= i <= len(self.lam) else 0

    def mu_(self, i: int) -> int:
        return self.mu[i - 1] if 1 <= i <= len(self.mu) else 0

    @cached_property
    def cells(self) -> frozenset:
        return frozenset(
            (i, j)
            for i in range(1, len(self.lam) + 1)
            for j in range(self.mu_(i) + 1, self.lam_(i) + 1)
        )

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def nrows(self) -> int:
        return len(self.lam)

    @property
    def ncols(self) -> int:
        return self.lam[0] if self.lam else 0

    def row_cells(self, i: int) -> range:
        return range(self.mu_(i) + 1, self.lam_(i) + 1)

    @cached_property
    def column_spans(self) -> dict[int, tuple[int, int]]:
        """Map column -> (top row, bottom row) for every nonempty column."""
        spans: dict[int, tuple[int, int]] = {}
        for i, j in sorted(self.cells):
            top, _ = spans.get(j, (i, i))
            spans[j] = (top, i)
        return spans

    def __eq__(self, other):
        if not isinstance(other, SkewShape):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __str__(self):
        return _fmt(self.lam) + (f"/{_fmt(self.mu)}" if self.mu else "")

    def __repr__(self):
        return f"SkewShape({self})"

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "mu": list(self.mu)}

    @classmethod
    def from_json(cls, data) -> "SkewShape":
        if isinstance(data, str):
            return parse_skew(data)
        return cls(tuple(data["lambda"]), tuple(data.get("mu", ())))


def _fmt(parts) -> str:
    return ",".join(map(str, parts)) if parts else "0"


_NUMS = r"\s*\d+(?:\s*,\s*\d+)*\s*"
_SKEW_RE = re.compile(rf"^(?P<lam>{_NUMS})(?:/(?P<mu>{_NUMS})?)?$")


def parse_skew(text: str) -> SkewShape:
    """Parse ``"7,7,7,4,4/5,3,2"`` (the ``/mu`` part is optional)."""
    m = _SKEW_RE.match(text.strip())
    if m is None:
        raise ParseError(f"cannot parse skew shape {text!r}")
    lam = [int(p) for p in m.group("lam").split(",")]
    mu = [int(p) for p in m.group("mu").split(",")] if m.group("mu") else []
    return SkewShape(as_partition(lam), as_partition(mu))


def shape_from_cells(cells: Iterable[Cell]) -> SkewShape:
    """Canonical skew shape with the given diagram, translated to touch row 1 and column 1.

    Raises NotAPartition if the cells do not form a skew diagram.
    """
    cells = frozenset(cells)
    if not cells:
        return SkewShape(())
    r0 = min(i for i, _ in cells)
    c0 = min(j for _, j in cells)
    r1 = max(i for i, _ in cells)
    rows = []
    for i in range(r0, r1 + 1):
        cols = sorted(j for r, j in cells if r == i)
        if cols and cols[-1] - cols[0] + 1 != len(cols):
            raise NotAPartition(f"row {i} is not an interval")
        rows.append((cols[0] - c0, cols[-1] - c0 + 1) if cols else None)
    lam, mu = [0] * len(rows), [0] * len(rows)
    below = 0
    for k in range(len(rows) - 1, -1, -1):
        if rows[k] is None:
            # an empty row between pieces collapses onto the right edge of the rows below
            lam[k] = mu[k] = below
        else:
            mu[k], lam[k] = rows[k]
            below = max(below, lam[k])
    shape = SkewShape(as_partition(lam), as_partition(mu))
    if {(i + r0 - 1, j + c0 - 1) for i, j in shape.cells} != cells:
        raise NotAPartition("cells do not form a skew diagram")
    return shape


def support(shape: SkewShape, i: int) -> range:
    """Columns j with both (i, j) and (i+1, j) in the shape: [mu_i + 1, lambda_{i+1}]."""
    lo, hi = shape.mu_(i) + 1, shape.lam_(i + 1)
    return range(lo, hi + 1) if lo <= hi else range(lo, lo)


def is_convex(cells: Iterable[Cell]) -> bool:
    """True iff every cell weakly between two cells (NW to SE) is present."""
    z = frozenset(cells)
    pts = sorted(z)
    for a, (i, j) in enumerate(pts):
        for i2, j2 in pts[a + 1:]:
            if j2 < j:
                continue
            for ii in range(i, i2 + 1):
                for jj in range(j, j2 + 1):
                    if (ii, jj) not in z:
                        return False
    return True


def _components(cells: frozenset) -> list[frozenset]:
    seen: set = set()
    comps = []
    for start in sorted(cells, key=lambda c: (c[1], c[0])):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        queue = deque([start])
        while queue:
            i, j = queue.popleft()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    comp.add(nb)
                    queue.append(nb)
        comps.append(frozenset(comp))
    return comps


def is_connected(shape: SkewShape) -> bool:
    return len(_components(shape.cells)) == 1


def connected_components(shape: SkewShape) -> list[SkewShape]:
    """Edge-connected components, each re-emitted canonically, ordered by leftmost column."""
    comps = _components(shape.cells)
    comps.sort(key=lambda c: min(j for _, j in c))
    return [shape_from_cells(c) for c in comps]


def restrict_columns(shape: SkewShape, a: int, b: int, keep_rows: bool = False) -> SkewShape:
    """Keep the columns in [a, b), renumbered from 1.

    Leading empty rows are dropped unless ``keep_rows`` is set, in which case
    every surviving cell keeps its original row index.
    """
    if not 1 <= a < b:
        raise ValueError(f"need 1 <= a < b, got a={a}, b={b}")
    width = b - a

    def clamp(v):
        return min(max(v - (a - 1), 0), width)

    lam = [clamp(p) for p in shape.lam]
    mu = [clamp(shape.mu_(i)) for i in range(1, len(lam) + 1)]
    if all(l == m for l, m in zip(lam, mu)):
        raise EmptyRestriction(f"no cell of {shape} lies in columns [{a},{b})")
    if not keep_rows:
        while lam[0] == mu[0]:
            lam.pop(0)
            mu.pop(0)
    return SkewShape(as_partition(lam), as_partition(mu))


def connected_shapes(n: int) -> Iterator[SkewShape]:
    """Every connected skew diagram with exactly n cells, once each.

    Shapes are emitted in canonical position (first row nonempty, bottom row
    starting in column 1).
    """
    if n <= 0:
        return

    def grow(lam, mu, left):
        # lam, mu are the rows so far (top to bottom); left = cells still to place
        if left == 0:
            if mu[-1] == 0:
                yield SkewShape(tuple(lam), tuple(mu))
            return
        top_l, top_m = lam[-1], mu[-1]
        # next row [m+1, l] overlaps the previous one: m < top_l ... and m <= top_m, l <= top_l
        for l in range(1, top_l + 1):
            for m in range(0, min(top_m, l - 1) + 1):
                if l <= top_m or l - m > left:
                    continue
                yield from grow(lam + [l], mu + [m], left - (l - m))

    for width in range(1, n + 1):
        for m in range(0, n):
            yield from grow([width + m], [m], n - width)


def skew_shapes(n: int) -> Iterator[SkewShape]:
    """Every skew diagram with exactly n cells, up to how its components are spaced.

    Components of a skew diagram occupy disjoint rows and columns and never
    interact, so each diagram is represented once per ordered tuple of
    connected pieces, stacked from the top-right corner to the bottom-left.
    """

    def tuples(k):
        if k == 0:
            yield ()
            return
        for first in range(1, k + 1):
            for piece in connected_shapes(first):
                for rest in tuples(k - first):
                    yield (piece, *rest)

    for pieces in tuples(n):
        yield _stack(pieces)


def _stack(pieces) -> SkewShape:
    lam: list[int] = []
    mu: list[int] = []
    offset = sum(p.ncols for p in pieces)
    for p in pieces:
        offset -= p.ncols
        lam.extend(x + offset for x in p.lam)
        mu.extend(p.mu_(i) + offset for i in range(1, p.nrows + 1))
    return SkewShape(tuple(lam), tuple(mu))
