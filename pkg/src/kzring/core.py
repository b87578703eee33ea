"""Exact scalars and sparse integer polynomials in ``t`` and in ``(u, v)``.

Rationals are :class:`fractions.Fraction`; it already keeps lowest terms
with a positive denominator and floors toward minus infinity.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Fraction

__all__ = [
    "Rational",
    "as_rational",
    "frac",
    "HodgePoly",
    "BigradedPoly",
    "eval_at_one",
    "reciprocal",
    "homogenize",
]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"13/12"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def frac(x) -> Fraction:
    """Fractional part ``x - floor(x)``, always in ``[0, 1)``."""
    x = as_rational(x)
    return x - math.floor(x)


class HodgePoly:
    """Sparse polynomial in ``t`` with integer coefficients.

    Instances are immutable and hashable.  Zero coefficients are never
    stored, so the zero polynomial has an empty term map.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], int, None] = None):
        if terms is None:
            clean = {}
        elif isinstance(terms, int):
            clean = {0: terms} if terms else {}
        else:
            clean = {}
            for e, c in terms.items():
                e = int(e)
                if e < 0:
                    raise ValueError(f"negative exponent {e}")
                if c:
                    clean[e] = clean.get(e, 0) + int(c)
            clean = {e: c for e, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> HodgePoly:
        return cls({exponent: coeff})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def items(self):
        """(exponent, coefficient) pairs, highest exponent first."""
        return sorted(self._terms.items(), reverse=True)

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(self._terms)

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return min(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = HodgePoly(other)
        if not isinstance(other, HodgePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = HodgePoly(other)
        if not isinstance(other, HodgePoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return HodgePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return HodgePoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = HodgePoly(other)
        if not isinstance(other, HodgePoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return HodgePoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, HodgePoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return HodgePoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = HodgePoly(1)
        for _ in range(k):
            out = out * self
        return out

    def exact_div(self, divisor: HodgePoly) -> HodgePoly:
        """Divide by a monomial ``c*t^e``; raises ArithmeticError unless exact."""
        if not divisor.is_monomial():
            raise ValueError(f"only monomial divisors are supported, got {divisor}")
        (e0, c0), = divisor._terms.items()
        out = {}
        for e, c in self._terms.items():
            if e < e0 or c % c0:
                raise ArithmeticError(f"{self} is not divisible by {divisor}")
            out[e - e0] = c // c0
        return HodgePoly(out)

    def __call__(self, t):
        return sum(c * t**e for e, c in self._terms.items())

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> HodgePoly:
        return cls({int(e): int(c) for e, c in data.items()})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                mono = str(abs(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                mono = var if abs(c) == 1 else f"{abs(c)}{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out

    def __repr__(self):
        return f"HodgePoly({self})"


ZERO = HodgePoly()
ONE = HodgePoly(1)
T = HodgePoly.monomial(1)


class BigradedPoly:
    """Sparse polynomial in ``u, v`` with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[tuple[int, int], int], None] = None):
        clean: dict[tuple[int, int], int] = {}
        for (p, q), c in (terms or {}).items():
            if p < 0 or q < 0:
                raise ValueError(f"negative exponent {(p, q)}")
            if c:
                clean[(int(p), int(q))] = clean.get((p, q), 0) + int(c)
        self._terms = {k: c for k, c in clean.items() if c}

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, BigradedPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BigradedPoly(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return BigradedPoly({k: c * other for k, c in self._terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (p1, q1), c1 in self._terms.items():
            for (p2, q2), c2 in other._terms.items():
                key = (p1 + p2, q1 + q2)
                out[key] = out.get(key, 0) + c1 * c2
        return BigradedPoly(out)

    __rmul__ = __mul__

    def swap(self) -> BigradedPoly:
        """Exchange the roles of ``u`` and ``v``."""
        return BigradedPoly({(q, p): c for (p, q), c in self._terms.items()})

    def total_degrees(self) -> set[int]:
        return {p + q for p, q in self._terms}

    def at_v_one(self) -> HodgePoly:
        out: dict[int, int] = {}
        for (p, _), c in self._terms.items():
            out[p] = out.get(p, 0) + c
        return HodgePoly(out)

    def __call__(self, u, v):
        return sum(c * u**p * v**q for (p, q), c in self._terms.items())

    def to_json(self) -> dict[str, int]:
        return {f"{p},{q}": c for (p, q), c in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> BigradedPoly:
        terms = {}
        for key, c in data.items():
            p, q = key.split(",")
            terms[(int(p), int(q))] = int(c)
        return cls(terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (p, q), c in self.items():
            mono = "".join(
                name if e == 1 else f"{name}^{e}" for name, e in (("u", p), ("v", q)) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"BigradedPoly({self})"


def eval_at_one(p: HodgePoly) -> int:
    """Sum of coefficients (the rank of the underlying Hodge structure)."""
    return p.eval_at_one()


def reciprocal(p: HodgePoly, m: int) -> HodgePoly:
    """``t^m * p(1/t)``; requires ``deg p <= m``."""
    if p and p.degree > m:
        raise ValueError(f"degree of {p} exceeds {m}")
    return HodgePoly({m - e: c for e, c in p.terms.items()})


def homogenize(p: HodgePoly, weight: int) -> BigradedPoly:
    """Send ``c t^e`` to ``c u^e v^(weight-e)``."""
    if p and p.degree > weight:
        raise ValueError(f"degree of {p} exceeds weight {weight}")
    return BigradedPoly({(e, weight - e): c for e, c in p.terms.items()})


def poly_sum(polys: Iterable[HodgePoly]) -> HodgePoly:
    out: dict[int, int] = {}
    for p in polys:
        for e, c in p._terms.items():
            out[e] = out.get(e, 0) + c
    return HodgePoly(out)
