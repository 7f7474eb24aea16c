"""Truncated generating functions over rpps and SSYTs of a skew shape.

Truncating at ``nx`` means only entries 1..nx are allowed, which is the same
as setting x_{nx+1} = x_{nx+2} = ... = 0 in the full series.  The t-variables
are never truncated: only t_1..t_{rows-1} can occur.

The default route sweeps the shape column by column.  A column is filled by
a weakly increasing word, which contributes x^(its distinct values) and one
t_r for every equal vertical pair starting in row r.  Adjacent columns only
interact through the row condition, so the sum factors into a transfer
product.  ``method="enumerate"`` sums over explicit fillings instead.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations, combinations_with_replacement

from .polynomial import SparsePoly, is_symmetric_x, specialize_t
from .shapes import SkewShape
from .tableaux import ceq, cont, enumerate_rpps, enumerate_ssyts, ircont

__all__ = ["gtilde", "g_poly", "schur_poly", "check_symmetry"]


def _column_words(height: int, nx: int, strict: bool):
    if strict:
        return combinations(range(1, nx + 1), height)
    return combinations_with_replacement(range(1, nx + 1), height)


def _transfer(shape: SkewShape, nx: int, strict: bool) -> SparsePoly:
    nt = max(shape.nrows - 1, 0)
    spans = shape.column_spans
    zero = ((0,) * nx, (0,) * nt)
    # state: (top row, word) of the previous column -> {(xexp, texp): coeff}
    states: dict = {(0, ()): {zero: 1}}
    for j in range(1, shape.ncols + 1):
        if j not in spans:
            total: dict = defaultdict(int)
            for acc in states.values():
                for m, c in acc.items():
                    total[m] += c
            states = {(0, ()): dict(total)}
            continue
        top, bot = spans[j]
        new: dict = {}
        for word in _column_words(bot - top + 1, nx, strict):
            xe = [0] * nx
            for v in set(word):
                xe[v - 1] = 1
            te = [0] * nt
            for k in range(len(word) - 1):
                if word[k] == word[k + 1]:
                    te[top + k - 1] = 1
            acc: dict = defaultdict(int)
            for (ptop, pword), pacc in states.items():
                # rows shared with the previous column must weakly increase to the right
                lo, hi = max(top, ptop), min(bot, ptop + len(pword) - 1)
                if any(pword[r - ptop] > word[r - top] for r in range(lo, hi + 1)):
                    continue
                for (pxe, pte), c in pacc.items():
                    acc[(pxe, pte)] += c
            if not acc:
                continue
            shifted = {}
            for (pxe, pte), c in acc.items():
                key = (tuple(a + b for a, b in zip(pxe, xe)), tuple(a + b for a, b in zip(pte, te)))
                shifted[key] = shifted.get(key, 0) + c
            new[(top, word)] = shifted
        states = new
    total = defaultdict(int)
    for acc in states.values():
        for m, c in acc.items():
            total[m] += c
    return SparsePoly(total)


def gtilde(shape: SkewShape, nx: int, method: str = "transfer") -> SparsePoly:
    """Sum of t^ceq(T) x^ircont(T) over rpps T of ``shape`` with entries <= nx."""
    if nx < 0:
        raise ValueError("nx must be non-negative")
    if method == "transfer":
        if nx == 0:
            return SparsePoly({((), ()): 1} if not shape.cells else {})
        return _transfer(shape, nx, strict=False)
    if method == "enumerate":
        terms: dict = defaultdict(int)
        for f in enumerate_rpps(shape, nx):
            terms[(ircont(f), ceq(f))] += 1
        return SparsePoly(terms)
    raise ValueError(f"unknown method {method!r}")


def g_poly(shape: SkewShape, nx: int, method: str = "transfer") -> SparsePoly:
    return specialize_t(gtilde(shape, nx, method), 1)


def schur_poly(shape: SkewShape, nx: int, method: str = "transfer") -> SparsePoly:
    """Sum of x^cont(T) over SSYTs T of ``shape`` with entries <= nx."""
    if method == "transfer":
        if nx == 0:
            return SparsePoly({((), ()): 1} if not shape.cells else {})
        return _transfer(shape, nx, strict=True)
    if method == "enumerate":
        terms: dict = defaultdict(int)
        for f in enumerate_ssyts(shape, nx):
            terms[(cont(f), ())] += 1
        return SparsePoly(terms)
    raise ValueError(f"unknown method {method!r}")


def check_symmetry(shape: SkewShape, nx: int) -> bool:
    return is_symmetric_x(gtilde(shape, nx), nx)
