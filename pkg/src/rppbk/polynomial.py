"""Exact sparse polynomials in x1, x2, ... and t1, t2, ... over the integers.

A monomial is a pair ``(xexp, texp)`` of trimmed exponent tuples, so
``((2, 1), (1,))`` is ``t1*x1^2*x2``.  Python ints give arbitrary precision.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Mapping

from .errors import VariableOutOfRange

__all__ = [
    "SparsePoly",
    "ZERO",
    "ONE",
    "x",
    "t",
    "const",
    "monomial",
    "swap_x",
    "is_symmetric_x",
    "is_symmetric_x_bruteforce",
    "specialize_t",
    "h_poly",
    "e_poly",
]

Monomial = tuple[tuple[int, ...], tuple[int, ...]]


def _trim(exps) -> tuple[int, ...]:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def _add_exps(a, b):
    if len(a) < len(b):
        a, b = b, a
    return tuple(u + v for u, v in zip(a, b)) + a[len(b):]


def _pad(e, n):
    return e + (0,) * (n - len(e))


@dataclass(frozen=True, eq=False)
class SparsePoly:
    terms: Mapping[Monomial, int] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict = {}
        for (xe, te), c in dict(self.terms).items():
            key = (_trim(xe), _trim(te))
            clean[key] = clean.get(key, 0) + int(c)
        object.__setattr__(self, "terms", {k: c for k, c in clean.items() if c})

    @classmethod
    def _raw(cls, terms: dict) -> "SparsePoly":
        # terms already trimmed and free of zeros
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", terms)
        return obj

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return SparsePoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict = defaultdict(int)
        for (xa, ta), ca in self.terms.items():
            for (xb, tb), cb in other.terms.items():
                out[(_add_exps(xa, xb), _add_exps(ta, tb))] += ca * cb
        return SparsePoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = const(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, xexp=(), texp=()) -> int:
        return self.terms.get((_trim(xexp), _trim(texp)), 0)

    @property
    def nx(self) -> int:
        """Largest x-index that actually occurs (0 for polynomials in t only)."""
        return max((len(xe) for xe, _ in self.terms), default=0)

    @property
    def nt(self) -> int:
        return max((len(te) for _, te in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Graded-lexicographic order on (xexp, texp), largest first."""
        nx, nt = self.nx, self.nt

        def key(item):
            (xe, te), _ = item
            return (sum(xe) + sum(te), _pad(xe, nx), _pad(te, nt))

        return sorted(self.terms.items(), key=key, reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (xe, te), c in self.sorted_terms():
            factors = [_var("t", k, e) for k, e in enumerate(te, 1) if e]
            factors += [_var("x", k, e) for k, e in enumerate(xe, 1) if e]
            mono = "*".join(factors)
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {b}" for s, b in parts[1:])

    def __repr__(self):
        return f"SparsePoly({self})"

    def to_json(self) -> dict:
        return {"terms": [{"c": c, "x": list(xe), "t": list(te)} for (xe, te), c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data) -> "SparsePoly":
        return cls({(tuple(d.get("x", ())), tuple(d.get("t", ()))): d["c"] for d in data["terms"]})


def _var(name, k, e):
    return f"{name}{k}" + (f"^{e}" if e > 1 else "")


def _coerce(p) -> SparsePoly:
    if isinstance(p, SparsePoly):
        return p
    if isinstance(p, int):
        return const(p)
    raise TypeError(f"cannot treat {p!r} as a polynomial")


def const(c: int) -> SparsePoly:
    return SparsePoly._raw({((), ()): c} if c else {})


def monomial(xexp: Iterable[int] = (), texp: Iterable[int] = (), c: int = 1) -> SparsePoly:
    return SparsePoly({(tuple(xexp), tuple(texp)): c})


def x(i: int, e: int = 1) -> SparsePoly:
    return monomial((0,) * (i - 1) + (e,))


def t(i: int, e: int = 1) -> SparsePoly:
    return monomial((), (0,) * (i - 1) + (e,))


ZERO = SparsePoly._raw({})
ONE = const(1)


def swap_x(p: SparsePoly, i: int) -> SparsePoly:
    """Transpose the exponents of x_i and x_{i+1} in every monomial."""
    if i < 1:
        raise ValueError("variable index starts at 1")
    out = {}
    for (xe, te), c in p.terms.items():
        if len(xe) < i:
            out[(xe, te)] = c
            continue
        e = list(_pad(xe, i + 1))
        e[i - 1], e[i] = e[i], e[i - 1]
        out[(_trim(e), te)] = c
    return SparsePoly._raw(out)


def is_symmetric_x(p: SparsePoly, nvars: int) -> bool:
    if p.nx > nvars:
        raise VariableOutOfRange(f"x{p.nx} occurs but only {nvars} variables allowed")
    return all(swap_x(p, i) == p for i in range(1, nvars))


def is_symmetric_x_bruteforce(p: SparsePoly, nvars: int) -> bool:
    """Invariance under every permutation of x1..x_nvars, checked one by one."""
    if p.nx > nvars:
        raise VariableOutOfRange(f"x{p.nx} occurs but only {nvars} variables allowed")
    for perm in permutations(range(nvars)):
        out = {}
        for (xe, te), c in p.terms.items():
            e = _pad(xe, nvars)
            out[(_trim(e[perm[k]] for k in range(nvars)), te)] = c
        if out != p.terms:
            return False
    return True


def specialize_t(p: SparsePoly, value: int) -> SparsePoly:
    """Set every t-variable to 0 or to 1."""
    if value == 0:
        return SparsePoly._raw({m: c for m, c in p.terms.items() if not m[1]})
    if value == 1:
        return SparsePoly(_merge_t(p))
    raise ValueError("t can only be specialized to 0 or 1")


def _merge_t(p: SparsePoly) -> dict:
    out: dict = defaultdict(int)
    for (xe, _), c in p.terms.items():
        out[(xe, ())] += c
    return out


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def h_poly(n: int, nvars: int) -> SparsePoly:
    """Complete homogeneous symmetric polynomial h_n(x1..x_nvars)."""
    return SparsePoly({(e, ()): 1 for e in _compositions(n, nvars)})


def e_poly(n: int, nvars: int, t_first: int = 0) -> SparsePoly:
    """Elementary symmetric e_n in t1..t_{t_first} followed by x1..x_nvars."""
    terms = {}
    for e in _compositions(n, t_first + nvars):
        if max(e, default=0) <= 1:
            terms[(e[t_first:], e[:t_first])] = 1
    return SparsePoly(terms)
