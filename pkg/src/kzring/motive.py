"""Hodge polynomials of rank-one motives and local monodromy data."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import ONE, T, HodgePoly, as_rational, frac
from .lie import Weight, casimir, lr_tensor

__all__ = [
    "KappaParam",
    "LocalExponent",
    "delmos",
    "pieri1_poly",
    "pieri1_arguments",
    "local_exponents",
    "weight_bounds",
]


@dataclass(frozen=True)
class KappaParam:
    """A nonzero rational ``kappa = r/s`` for sl_n, with ``N = n * |r|``."""

    n: int
    kappa: Fraction

    def __post_init__(self):
        k = as_rational(self.kappa)
        if k == 0:
            raise ValueError("kappa must be nonzero")
        object.__setattr__(self, "kappa", k)

    @classmethod
    def positive(cls, n: int, kappa) -> KappaParam:
        """Constructor used by the engine; rejects ``kappa <= 0``."""
        k = as_rational(kappa)
        if k <= 0:
            raise ValueError(f"kappa must be positive, got {k}")
        return cls(n, k)

    @property
    def N(self) -> int:
        return self.n * abs(self.kappa.numerator)

    def galois(self, b: int) -> KappaParam:
        """The conjugate obtained from ``zeta_N -> zeta_N^b``, i.e. ``kappa / b``."""
        return KappaParam(self.n, self.kappa / b)


@dataclass(frozen=True)
class LocalExponent:
    target: Weight
    exponent: Fraction

    @property
    def residue(self) -> Fraction:
        """Exponent modulo 1; the eigenvalue is ``exp(2 pi i residue)``."""
        return frac(self.exponent)


def delmos(a, kappa) -> HodgePoly:
    """Hodge polynomial (``1`` or ``t``) of the rank-one motive ``[a; kappa]``, ``kappa > 0``."""
    a = as_rational(a)
    kappa = as_rational(kappa)
    if a <= 0 or kappa <= 0:
        raise ValueError(f"need a > 0 and kappa > 0, got a={a}, kappa={kappa}")
    if (a / kappa).denominator == 1:
        return ONE
    if ((1 + a) / kappa).denominator == 1:
        return T
    s = frac(-1 / kappa) + frac(-a / kappa) + frac((1 + a) / kappa)
    if s == 2:
        return T
    if s == 1:
        return ONE
    raise ArithmeticError(f"fractional-part sum {s} not in {{1, 2}} for a={a}, kappa={kappa}")


def pieri1_arguments(lam: Weight, m: int) -> list[int]:
    """Arguments ``a_j`` of the factors ``[a_j; kappa]`` for ``mu = lam + L_{m+1}``.

    ``a_j = (j - 1) + sum_{i = m-j+1}^{m} (lam, alpha_i)`` for ``j = 1..m``.
    """
    v = lam.vec
    # sum_{i=m-j+1}^{m} (v_i - v_{i+1}) telescopes to v_{m-j+1} - v_{m+1} (1-based)
    return [(j - 1) + v[m - j] - v[m] for j in range(1, m + 1)]


def pieri1_poly(n: int, lam: Weight, m: int, kappa) -> HodgePoly:
    """Coefficient of ``[lam + varpi_1 - (alpha_1 + ... + alpha_m)]`` in ``[lam] * [varpi_1]``."""
    if lam.n != n:
        raise ValueError(f"rank mismatch: sl_{n} vs sl_{lam.n}")
    if not 0 <= m <= n - 1:
        raise ValueError(f"m={m} out of range for sl_{n}")
    if m == 0:
        return ONE
    out = ONE
    for a in pieri1_arguments(lam, m):
        if a <= 0:
            raise ValueError(f"{lam} + L_{m + 1} is not a Pieri summand")
        out = out * delmos(a, kappa)
    (e, c), = out.terms.items()
    assert c == 1 and 0 <= e <= m, out
    return out


def local_exponents(n: int, kappa, coalescing: Sequence[Weight]) -> list[LocalExponent]:
    """Exponents ``(-c(mu) + sum c(lam_i)) / (2 kappa)`` over summands ``mu`` of the product."""
    kappa = as_rational(kappa)
    if kappa == 0:
        raise ValueError("kappa must be nonzero")
    if not coalescing:
        raise ValueError("need at least one weight")
    support = {coalescing[0]: 1}
    for lam in coalescing[1:]:
        nxt: dict[Weight, int] = {}
        for g in support:
            for h in lr_tensor(n, g, lam):
                nxt[h] = 1
        support = nxt
    total = sum((casimir(n, lam) for lam in coalescing), Fraction(0))
    return [
        LocalExponent(mu, (total - casimir(n, mu)) / (2 * kappa))
        for mu in sorted(support, reverse=True)
    ]


def weight_bounds(p: HodgePoly, pconj: HodgePoly) -> tuple[int, int]:
    """Bounds on the weights from a Hodge polynomial and its complex conjugate."""
    if not p or not pconj:
        raise ValueError("Hodge polynomials must be nonzero")
    return p.min_degree + pconj.min_degree, p.degree + pconj.degree
