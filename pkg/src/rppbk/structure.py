"""Structure of 12-rpps with a prescribed seplist partition.

For a 12-rpp T, the cells holding a 1 directly above a 2 sit in distinct
columns.  Reading their rows from left to right gives a weakly decreasing
list nu, the seplist partition of T.  Whether some 12-rpp realizes a given
nu, and how many do, depends only on how the supports of the entries of nu
pack into column intervals.

Column intervals are half-open ``[a, b)`` throughout, matching
:func:`rppbk.shapes.support` which returns a ``range``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import (
    DisconnectedShape,
    EmptyColumns,
    InfeasibleCeq,
    NonRepresentableInput,
    NotAdmissible,
    NotAnRpp,
)
from .polynomial import ZERO, SparsePoly, monomial
from .shapes import SkewShape, is_connected, restrict_columns, support
from .tableaux import Filling, enumerate_rpps, ircont, is_rpp, trim

__all__ = [
    "Classification",
    "Decomposition",
    "nr_cells",
    "seplist_partition",
    "is_admissible",
    "nu_subset",
    "nu_cap",
    "classify",
    "decompose",
    "component_shape",
    "p_poly",
    "q_formula",
    "ceq_to_seplist",
    "seplist_to_ceq",
    "enumerate_by_seplist",
    "rpps12_by_seplist",
    "admissible_partitions",
    "transposing_maps",
]


class Classification(Enum):
    NON_REPRESENTABLE = "non-representable"
    REDUCIBLE = "reducible"
    IRREDUCIBLE = "irreducible"


def _check_12rpp(f: Filling):
    if any(v not in (1, 2) for v in f.entries.values()) or not is_rpp(f):
        raise NotAnRpp("expected an rpp with entries 1 and 2")


def nr_cells(f: Filling) -> frozenset:
    """Cells holding a 1 with a 2 directly below."""
    _check_12rpp(f)
    e = f.entries
    return frozenset(c for c, v in e.items() if v == 1 and e.get((c[0] + 1, c[1])) == 2)


def seplist_partition(f: Filling) -> tuple[int, ...]:
    return tuple(i for i, _ in sorted(nr_cells(f), key=lambda c: c[1]))


def _nr_rows(e: dict) -> tuple[int, ...]:
    cells = [c for c, v in e.items() if v == 1 and e.get((c[0] + 1, c[1])) == 2]
    return tuple(i for i, _ in sorted(cells, key=lambda c: c[1]))


@lru_cache(maxsize=4096)
def _support_sizes(shape: SkewShape) -> dict[int, int]:
    return {i: len(support(shape, i)) for i in range(1, shape.nrows)}


def is_admissible(nu: Sequence[int], shape: SkewShape) -> bool:
    nu = tuple(nu)
    if any(nu[k] < nu[k + 1] for k in range(len(nu) - 1)):
        return False
    sizes = _support_sizes(shape)
    return all(sizes.get(i, 0) > 0 for i in nu)


def _require_full_columns(shape: SkewShape):
    # column intervals are counted from column 1, so an empty column would count as free space
    if len(shape.column_spans) != shape.ncols:
        raise EmptyColumns(f"{shape} has empty columns; translate it so every column is occupied")


def _require_admissible(nu, shape):
    if not is_admissible(nu, shape):
        raise NotAdmissible(f"{tuple(nu)} is not an admissible partition for {shape}")


def nu_subset(nu: Sequence[int], shape: SkewShape, a: int, b: int) -> tuple[int, ...]:
    """Entries of nu whose support lies inside the columns [a, b)."""
    _require_admissible(nu, shape)
    out = []
    for i in nu:
        s = support(shape, i)
        if s.start >= a and s.stop <= b:
            out.append(i)
    return tuple(out)


def nu_cap(nu: Sequence[int], shape: SkewShape, a: int, b: int) -> tuple[int, ...]:
    """Entries of nu whose support meets the columns [a, b)."""
    _require_admissible(nu, shape)
    out = []
    for i in nu:
        s = support(shape, i)
        if s.start < b and s.stop > a:
            out.append(i)
    return tuple(out)


@lru_cache(maxsize=4096)
def _interval_rows(shape: SkewShape) -> tuple:
    """For every 1 <= a < b <= ncols+1, the rows whose support lies in [a, b)."""
    n = shape.ncols
    supports = {i: support(shape, i) for i in range(1, shape.nrows)}
    out = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 2):
            rows = tuple(i for i, s in supports.items() if len(s) and s.start >= a and s.stop <= b)
            out.append((a, b, rows))
    return tuple(out)


def _slack(nu, shape) -> list[tuple[int, int, int]]:
    """(a, b, (b - a) - #nu|[a,b)) for every interval."""
    mult = Counter(nu)
    return [(a, b, (b - a) - sum(mult[i] for i in rows)) for a, b, rows in _interval_rows(shape)]


def classify(nu: Sequence[int], shape: SkewShape) -> Classification:
    _require_full_columns(shape)
    _require_admissible(nu, shape)
    mult = Counter(nu)
    tight = False
    for a, b, rows in _interval_rows(shape):
        slack = (b - a) - sum(mult[i] for i in rows)
        if slack < 0:
            return Classification.NON_REPRESENTABLE
        tight = tight or slack == 0
    return Classification.REDUCIBLE if tight else Classification.IRREDUCIBLE


@dataclass(frozen=True)
class Decomposition:
    """Forced-mixed blocks ``[a_k, b_k)`` for k = 1..r and the components between them.

    ``a`` holds a_1..a_{r+1} and ``b`` holds b_0..b_r, so component k spans
    the columns ``[b[k], a[k])``.
    """

    nu: tuple[int, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    blocks: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.components) - 1

    @property
    def M(self) -> int:
        return len(self.nu)

    def component_interval(self, k: int) -> tuple[int, int]:
        return self.b[k], self.a[k]

    def __str__(self):
        comps = ",".join("(" + ",".join(map(str, c)) + ")" for c in self.components)
        return f"components {comps}; degrees {','.join(map(str, self.degrees))}"


def decompose(nu: Sequence[int], shape: SkewShape) -> Decomposition:
    """Split nu along the maximal column intervals that must be entirely mixed."""
    nu = tuple(nu)
    if not is_connected(shape):
        raise DisconnectedShape(f"{shape} is not connected")
    _require_full_columns(shape)
    _require_admissible(nu, shape)
    slacks = _slack(nu, shape)
    if any(s < 0 for _, _, s in slacks):
        raise NonRepresentableInput(f"{nu} is not representable on {shape}")
    forced = set()
    for a, b, s in slacks:
        if s == 0:
            forced.update(range(a, b))
    n = shape.ncols
    runs = []
    j = 1
    while j <= n:
        if j in forced:
            start = j
            while j in forced:
                j += 1
            runs.append((start, j))
        else:
            j += 1
    a_list = [start for start, _ in runs] + [n + 1]
    b_list = [1] + [stop for _, stop in runs]
    components, degrees = [], []
    for k in range(len(b_list)):
        lo, hi = b_list[k], a_list[k]
        comp = nu_cap(nu, shape, lo, hi) if lo < hi else ()
        components.append(comp)
        degrees.append(hi - lo - len(comp))
    blocks = tuple(nu_subset(nu, shape, start, stop) for start, stop in runs)
    return Decomposition(nu, tuple(a_list), tuple(b_list), tuple(components), blocks, tuple(degrees))


def component_shape(shape: SkewShape, dec: Decomposition, k: int) -> SkewShape:
    """Columns of component k, with the original row numbering kept."""
    lo, hi = dec.component_interval(k)
    return restrict_columns(shape, lo, hi, keep_rows=True)


def p_poly(n: int) -> SparsePoly:
    """x1^n + x1^(n-1) x2 + ... + x2^n."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    return SparsePoly({((n - k, k), ()): 1 for k in range(n + 1)})


def q_formula(nu: Sequence[int], shape: SkewShape, zero_if_nonrepresentable: bool = False) -> SparsePoly:
    """(x1 x2)^#nu times the product of P_{n_k} over the component degrees."""
    try:
        dec = decompose(nu, shape)
    except NonRepresentableInput:
        if zero_if_nonrepresentable:
            return ZERO
        raise
    out = monomial((dec.M, dec.M))
    for n in dec.degrees:
        out = out * p_poly(n)
    return out


def ceq_to_seplist(shape: SkewShape, alpha: Sequence[int]) -> tuple[int, ...]:
    """The seplist partition shared by all 12-rpps with ceq = alpha."""
    alpha = trim(alpha)
    out = []
    for i in range(max(len(alpha), shape.nrows - 1), 0, -1):
        a_i = alpha[i - 1] if i <= len(alpha) else 0
        room = len(support(shape, i))
        if not 0 <= a_i <= room:
            raise InfeasibleCeq(f"ceq entry {a_i} in row {i} exceeds {room}")
        out.extend([i] * (room - a_i))
    return tuple(out)


def seplist_to_ceq(shape: SkewShape, nu: Sequence[int]) -> tuple[int, ...]:
    mult = Counter(nu)
    if any(i < 1 for i in mult):
        raise InfeasibleCeq("rows are positive")
    alpha = []
    for i in range(1, max(shape.nrows - 1, max(mult, default=0)) + 1):
        room = len(support(shape, i))
        if mult[i] > room:
            raise InfeasibleCeq(f"row {i} appears {mult[i]} times but has {room} vertical pairs")
        alpha.append(room - mult[i])
    return trim(alpha)


def rpps12_by_seplist(shape: SkewShape) -> dict[tuple[int, ...], list[Filling]]:
    """All 12-rpps of the shape grouped by seplist partition."""
    groups: dict = defaultdict(list)
    for f in enumerate_rpps(shape, 2):
        groups[_nr_rows(f.entries)].append(f)
    return dict(groups)


def enumerate_by_seplist(shape: SkewShape, nu: Sequence[int]) -> list[Filling]:
    nu = tuple(nu)
    return [f for f in enumerate_rpps(shape, 2) if _nr_rows(f.entries) == nu]


def admissible_partitions(shape: SkewShape, max_length: int, max_extra: int = 1) -> Iterator[tuple[int, ...]]:
    """Admissible partitions with at most ``max_length`` entries.

    A row i may repeat at most |supp(i)| + max_extra times; more copies are
    non-representable on sight, since they would all need distinct columns
    in supp(i).
    """
    rows = [i for i in range(shape.nrows - 1, 0, -1) if len(support(shape, i))]
    caps = [len(support(shape, i)) + max_extra for i in rows]

    def rec(k, left):
        if k == len(rows):
            yield ()
            return
        for m in range(0, min(caps[k], left) + 1):
            for rest in rec(k + 1, left - m):
                yield (rows[k],) * m + rest

    yield from rec(0, max_length)


def transposing_maps(tableaux: Sequence[Filling]) -> list[dict[int, int]]:
    """Every bijection (as an index map) with ircont(b(T)) = ircont(T) with entries 1,2 swapped."""
    stats = [ircont(f) + (0, 0) for f in tableaux]
    want = [trim((s[1], s[0]) + s[2:]) for s in stats]
    have = [trim(s) for s in stats]
    n = len(tableaux)
    found: list[dict[int, int]] = []
    image: dict[int, int] = {}
    used = [False] * n

    def rec(k):
        if k == n:
            found.append(dict(image))
            return
        for j in range(n):
            if not used[j] and have[j] == want[k]:
                used[j] = True
                image[k] = j
                rec(k + 1)
                used[j] = False
                del image[k]

    rec(0)
    return found
