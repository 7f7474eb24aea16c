"""Bender-Knuth type involutions on rpps and SSYTs."""

from __future__ import annotations

from functools import lru_cache

from ..errors import NotAnRpp, NotAnSsyt
from ..tableaux import Filling, _monotone, is_rpp, is_ssyt
from .table import Table12, flip, normalize

__all__ = ["bk12_table", "bk12", "bk_general", "classical_bk"]


@lru_cache(maxsize=200_000)
def bk12_table(t: Table12) -> Table12:
    """Flip, then resolve descents until none remain."""
    return normalize(flip(t))


@lru_cache(maxsize=200_000)
def _bk12_cells(items: frozenset) -> tuple:
    return tuple(bk12_table(Table12.from_entries(dict(items))).entries.items())


def bk12(f: Filling) -> Filling:
    """The involution on 12-rpps that swaps the counts of columns holding 1 and holding 2."""
    if any(v not in (1, 2) for v in f.entries.values()) or not is_rpp(f):
        raise NotAnRpp("bk12 expects an rpp with entries 1 and 2")
    return Filling(bk12_table(Table12.from_entries(f.entries)).entries, f.shape)


def bk_general(f: Filling, i: int) -> Filling:
    """Apply the 12-involution to the cells holding i or i+1, leaving the rest alone."""
    if i < 1:
        raise ValueError("i must be positive")
    if not is_rpp(f):
        raise NotAnRpp("bk_general expects an rpp")
    return _bk_general(f, i)


def _bk_general(f: Filling, i: int) -> Filling:
    # the cells holding i or i+1 in an rpp form a convex set
    sub = {c: v - i + 1 for c, v in f.entries.items() if v == i or v == i + 1}
    if not sub:
        return f
    image = _bk12_cells(frozenset(sub.items()))
    out = dict(f.entries)
    for c, v in image:
        out[c] = v + i - 1
    return Filling._trusted(out, f.shape)


def classical_bk(f: Filling, i: int) -> Filling:
    """Classical Bender-Knuth move on an SSYT.

    An i sitting directly above an i+1 is frozen, as is that i+1.  In each
    row the free entries read i^r (i+1)^s and are rewritten as i^s (i+1)^r.
    """
    if i < 1:
        raise ValueError("i must be positive")
    if not is_ssyt(f):
        raise NotAnSsyt("classical_bk expects an SSYT")
    return _classical_bk(f, i)


def _classical_bk(f: Filling, i: int) -> Filling:
    e = f.entries
    frozen = set()
    for (r, c), v in e.items():
        if v == i and e.get((r + 1, c)) == i + 1:
            frozen.update({(r, c), (r + 1, c)})
    rows: dict[int, list[int]] = {}
    for (r, c), v in e.items():
        if (v == i or v == i + 1) and (r, c) not in frozen:
            rows.setdefault(r, []).append(c)
    out = dict(e)
    for r, cols in rows.items():
        cols.sort()
        s = sum(1 for c in cols if e[(r, c)] == i + 1)
        for k, c in enumerate(cols):
            out[(r, c)] = i if k < s else i + 1
    if not _monotone(out, True):
        raise AssertionError("classical move left the SSYT class")
    return Filling._trusted(out, f.shape)
