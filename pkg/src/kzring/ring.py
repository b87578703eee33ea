"""Multiplication in the enriched representation and fusion rings of sl_n.

Products are built from three layers:

* ``[lam] * [varpi_1]`` whose coefficients are products of rank-one
  Hodge polynomials (:func:`kzring.motive.pieri1_poly`);
* ``[lam] * [varpi_k]``, obtained from the first layer by induction on the
  rank, the number of boxes and the number of simple roots, solving one
  associativity identity per coefficient;
* arbitrary products, by writing the right factor as a polynomial in the
  fundamental classes.

Fusion products for ``kappa = (level + n) / b`` use the Pieri coefficients
of the representation ring at the same ``kappa``, truncated to the alcove:
a Pieri conformal block has rank one, so it coincides with its KZ motive.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

from .core import ONE, ZERO, BigradedPoly, HodgePoly, as_rational, homogenize, poly_sum, reciprocal
from .lie import (
    AlcoveFold,
    Weight,
    affine_fold,
    classical_pieri,
    dual,
    pieri_count,
    pieri_subset,
    root_decompose,
    s_value,
)
from .motive import pieri1_poly

__all__ = [
    "Representation",
    "Fusion",
    "Expansion",
    "RingContext",
    "context",
    "PieriInconsistency",
    "PiImage",
    "pi_map",
    "pi_predict",
    "dual_kappa",
    "signed_star",
    "clear_caches",
]

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class Representation:
    kappa: Fraction

    def __post_init__(self):
        k = as_rational(self.kappa)
        if k <= 0:
            raise ValueError(f"kappa must be positive, got {k}; use signed_star for kappa < 0")
        object.__setattr__(self, "kappa", k)


@dataclass(frozen=True)
class Fusion:
    level: int
    galois: int = 1


class PieriInconsistency(ArithmeticError):
    """An associativity identity could not be solved exactly in Z[t]."""


class Expansion(Mapping):
    """Finite map ``Weight -> HodgePoly`` with zero values dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[Weight, HodgePoly], Iterable, None] = None):
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        acc: dict[Weight, HodgePoly] = {}
        for w, p in items:
            if isinstance(p, int):
                p = HodgePoly(p)
            acc[w] = acc[w] + p if w in acc else p
        self._terms = {w: acc[w] for w in sorted(acc, reverse=True) if acc[w]}

    def __getitem__(self, w):
        return self._terms[w]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def coeff(self, w: Weight) -> HodgePoly:
        return self._terms.get(w, ZERO)

    def __eq__(self, other):
        if isinstance(other, Expansion):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == Expansion(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: Expansion) -> Expansion:
        return Expansion(list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other: Expansion) -> Expansion:
        return self + other.scale(HodgePoly(-1))

    def scale(self, p: HodgePoly) -> Expansion:
        return Expansion({w: q * p for w, q in self._terms.items()})

    def at_one(self) -> dict[Weight, int]:
        """Specialize ``t -> 1``."""
        return {w: p.eval_at_one() for w, p in self._terms.items() if p.eval_at_one()}

    def to_json(self) -> list[dict]:
        return [{"weight": w.to_json(), "poly": p.to_json()} for w, p in self._terms.items()]

    @classmethod
    def from_json(cls, n: int, data) -> Expansion:
        return cls({Weight(n, tuple(e["weight"])): HodgePoly.from_json(e["poly"]) for e in data})

    def __repr__(self):
        body = ", ".join(f"{w}: {p}" for w, p in self._terms.items())
        return f"Expansion({{{body}}})"


def _linear_combination(pairs: Iterable[tuple[HodgePoly, Expansion]]) -> Expansion:
    acc: dict[Weight, list[HodgePoly]] = {}
    for c, e in pairs:
        for w, p in e.items():
            acc.setdefault(w, []).append(c * p)
    return Expansion({w: poly_sum(ps) for w, ps in acc.items()})


class RingContext:
    """Rank, mode and the write-once caches of one ring."""

    def __init__(self, n: int, mode: Union[Representation, Fusion]):
        if n < 2:
            raise ValueError("need n >= 2")
        self.n = n
        if isinstance(mode, Fusion):
            if mode.level < 1:
                raise ValueError("fusion level must be at least 1")
            big = mode.level + n
            b = mode.galois % big
            if math.gcd(b, big) != 1:
                raise ValueError(f"galois parameter {mode.galois} is not a unit mod {big}")
            mode = Fusion(mode.level, b)
            self.kappa = Fraction(big, b)
            self._rep = context(n, Representation(self.kappa))
        elif isinstance(mode, Representation):
            self.kappa = mode.kappa
            self._rep = self
        else:
            raise TypeError(f"unknown mode {mode!r}")
        self.mode = mode
        self._pieri: dict = {}
        self._expand: dict = {}
        self._apply: dict = {}
        self._star: dict = {}

    def __repr__(self):
        return f"RingContext(n={self.n}, mode={self.mode})"

    @property
    def is_fusion(self) -> bool:
        return isinstance(self.mode, Fusion)

    @property
    def level(self) -> Optional[int]:
        return self.mode.level if self.is_fusion else None

    def _check(self, *weights: Weight):
        for w in weights:
            if w.n != self.n:
                raise ValueError(f"{w} is not an sl_{self.n} weight")
            if self.is_fusion and w.level > self.mode.level:
                raise ValueError(f"{w} has level {w.level} > {self.mode.level}")

    def in_alcove(self, w: Weight) -> bool:
        return not self.is_fusion or w.level <= self.mode.level

    # -- Pieri products -------------------------------------------------

    def pieri_coefficient(self, lam: Weight, k: int, mu: Weight) -> HodgePoly:
        """Coefficient of ``[mu]`` in ``[lam] * [varpi_k]``."""
        if not self.in_alcove(mu):
            return ZERO
        return self._rep._rep_pieri(lam, k, mu)

    def _rep_pieri(self, lam: Weight, k: int, mu: Weight) -> HodgePoly:
        key = (lam, k, mu)
        hit = self._pieri.get(key)
        if hit is not None:
            return hit
        value = self._rep_pieri_uncached(lam, k, mu)
        return self._pieri.setdefault(key, value)

    def _rep_pieri_uncached(self, lam: Weight, k: int, mu: Weight) -> HodgePoly:
        n = self.n
        rows = pieri_subset(lam, k, mu)
        if rows is None:
            return ZERO
        if pieri_count(n, k, rows) == 0:
            return ONE
        if k == 1:
            (i,) = rows
            return pieri1_poly(n, lam, i - 1, self.kappa)
        if k == n - 1:
            return self._rep_pieri(dual(n, lam), 1, dual(n, mu))
        if n not in rows:
            # L_n never moves: the same coefficient for sl_{n-1}
            sub = context(n - 1, Representation(self.kappa))
            return sub._rep_pieri(_drop_last(lam), k, _drop_last(mu))
        if 1 in rows:
            # dual picture has L_n fixed, handled by the branch above
            return self._rep_pieri(dual(n, lam), n - k, dual(n, mu))
        return self._solve_pieri(lam, k, mu)

    def _solve_pieri(self, lam: Weight, k: int, mu: Weight) -> HodgePoly:
        """Solve ``([lam'] * [varpi_1]) * [varpi_k] = ([lam'] * [varpi_k]) * [varpi_1]`` at ``[mu]``.

        ``lam = lam' + L_pivot`` where the pivot is row 1 if the first row
        is strictly longest, else the last row of the leading block of
        equal rows.  The unknown enters with the monomial coefficient of
        ``[lam]`` in ``[lam'] * [varpi_1]``.
        """
        n = self.n
        v = lam.vec
        if v[0] > v[1]:
            pivot = 1
        else:
            pivot = max(i for i in range(1, n + 1) if v[i - 1] == v[0])
        lam_p = lam.shift(pivot, -1)
        lead = pieri1_poly(n, lam_p, pivot - 1, self.kappa)

        rhs = []
        for i in range(1, n + 1):
            rho_ = mu.shift(i, -1)
            if rho_ is None:
                continue
            c = self._rep_pieri(lam_p, k, rho_)
            if c:
                rhs.append(c * pieri1_poly(n, rho_, i - 1, self.kappa))
        known = []
        for i in range(1, n + 1):
            if i == pivot:
                continue
            nu = lam_p.shift(i, 1)
            if nu is None:
                continue
            c = self._rep_pieri(nu, k, mu)
            if c:
                known.append(pieri1_poly(n, lam_p, i - 1, self.kappa) * c)
        residual = poly_sum(rhs) - poly_sum(known)
        try:
            value = residual.exact_div(lead)
        except ArithmeticError as exc:
            raise PieriInconsistency(
                f"sl_{n}, kappa={self.kappa}: coefficient of {mu} in {lam}*varpi_{k}; "
                f"lam'={lam_p}, pivot row {pivot}, leading coefficient {lead}, "
                f"rhs terms {[str(p) for p in rhs]}, known terms {[str(p) for p in known]}, "
                f"residual {residual}"
            ) from exc
        if not value or not value.is_nonnegative():
            raise PieriInconsistency(
                f"sl_{n}, kappa={self.kappa}: non-effective Pieri coefficient {value} "
                f"for {mu} in {lam}*varpi_{k}"
            )
        return value

    def star_pieri1(self, lam: Weight) -> Expansion:
        return self.star_pieri(lam, 1)

    def star_pieri(self, lam: Weight, k: int) -> Expansion:
        """``[lam] * [varpi_k]``."""
        self._check(lam)
        if not 1 <= k <= self.n - 1:
            raise ValueError(f"k={k} out of range for sl_{self.n}")
        out = {}
        for mu in classical_pieri(self.n, lam, k):
            if self.in_alcove(mu):
                out[mu] = self.pieri_coefficient(lam, k, mu)
        return Expansion(out)

    # -- general products ----------------------------------------------

    def expand_in_fundamentals(self, mu: Weight) -> dict[Monomial, HodgePoly]:
        """Write ``[mu]`` as a polynomial in ``[varpi_1], ..., [varpi_{n-1}]``.

        Keys are exponent vectors.  Built by peeling off one fundamental
        weight and subtracting the lower Pieri terms, which are strictly
        smaller in the dominance order.
        """
        self._check(mu)
        hit = self._expand.get(mu)
        if hit is not None:
            return dict(hit)
        n = self.n
        if mu.is_zero():
            value = {(0,) * (n - 1): ONE}
        else:
            labels = mu.dynkin
            j = next(i for i, a in enumerate(labels) if a) + 1
            smaller = Weight(n, tuple(a - 1 if i < j else a for i, a in enumerate(mu.parts)))
            acc: dict[Monomial, list[HodgePoly]] = {}
            for mono, c in self.expand_in_fundamentals(smaller).items():
                bumped = tuple(e + (i == j - 1) for i, e in enumerate(mono))
                acc.setdefault(bumped, []).append(c)
            pieri = self.star_pieri(smaller, j)
            assert pieri.coeff(mu) == ONE, (smaller, j, pieri)
            for nu, c in pieri.items():
                if nu == mu:
                    continue
                for mono, d in self.expand_in_fundamentals(nu).items():
                    acc.setdefault(mono, []).append(-(c * d))
            value = {m: poly_sum(ps) for m, ps in acc.items()}
            value = {m: p for m, p in value.items() if p}
        self._expand.setdefault(mu, value)
        return dict(value)

    def apply_monomial(self, lam: Weight, mono: Monomial) -> Expansion:
        """``[lam] * prod_i [varpi_i]^mono[i]`` by repeated Pieri products."""
        key = (lam, mono)
        hit = self._apply.get(key)
        if hit is not None:
            return hit
        if not any(mono):
            value = Expansion({lam: ONE})
        else:
            j = next(i for i, e in enumerate(mono) if e)
            rest = tuple(e - (i == j) for i, e in enumerate(mono))
            value = _linear_combination(
                (c, self.apply_monomial(delta, rest))
                for delta, c in self.star_pieri(lam, j + 1).items()
            )
        return self._apply.setdefault(key, value)

    def star(self, lam: Weight, mu: Weight) -> Expansion:
        """``[lam] * [mu]``."""
        self._check(lam, mu)
        key = (lam, mu)
        hit = self._star.get(key)
        if hit is not None:
            return hit
        value = _linear_combination(
            (c, self.apply_monomial(lam, mono))
            for mono, c in self.expand_in_fundamentals(mu).items()
        )
        return self._star.setdefault(key, value)

    def multiply(self, left: Expansion, right: Expansion) -> Expansion:
        """Bilinear extension of :meth:`star`."""
        return _linear_combination(
            (p * q, self.star(a, b)) for a, p in left.items() for b, q in right.items()
        )

    def product(self, lambdas: Sequence[Weight]) -> Expansion:
        """Left-bracketed product ``(([l1] * [l2]) * [l3]) ...``."""
        if not lambdas:
            raise ValueError("need at least one weight")
        self._check(*lambdas)
        acc = Expansion({lambdas[0]: ONE})
        for lam in lambdas[1:]:
            acc = _linear_combination((c, self.star(g, lam)) for g, c in acc.items())
        return acc

    def npoint(self, lambdas: Sequence[Weight], nu: Weight) -> HodgePoly:
        """Coefficient of ``[nu]`` in ``[l1] * ... * [lk]``."""
        self._check(nu)
        return self.product(lambdas).coeff(nu)

    def bigraded_star(self, lam: Weight, mu: Weight) -> dict[Weight, BigradedPoly]:
        """Fusion product with each coefficient made homogeneous of degree ``M``."""
        if not self.is_fusion:
            raise ValueError("bigraded products are defined for fusion rings only")
        out = {}
        for nu, p in self.star(lam, mu).items():
            m = root_decompose(self.n, [lam, mu], nu).M
            out[nu] = homogenize(p, int(m))
        return out


def context(n: int, mode: Union[Representation, Fusion]) -> RingContext:
    """Shared ring context; sub-rank contexts reuse the same caches."""
    if isinstance(mode, Fusion):
        mode = Fusion(mode.level, mode.galois % (mode.level + n))
    return _context(n, mode)


@lru_cache(maxsize=None)
def _context(n: int, mode: Union[Representation, Fusion]) -> RingContext:
    return RingContext(n, mode)


def rep(n: int, kappa) -> RingContext:
    return context(n, Representation(as_rational(kappa)))


def fusion(n: int, level: int, galois: int = 1) -> RingContext:
    return context(n, Fusion(level, galois))


def _drop_last(w: Weight) -> Weight:
    return Weight.from_vector(w.n - 1, w.vec[:-1])


def dual_kappa(expansion: Expansion, factors: Sequence[Weight]) -> Expansion:
    """Termwise ``P -> t^M P(1/t)``: turns a ``kappa`` product into the ``-kappa`` one."""
    n = factors[0].n
    out = {}
    for nu, p in expansion.items():
        rv = root_decompose(n, factors, nu)
        if rv is None:
            raise ValueError(f"{nu} is not below {list(map(str, factors))}")
        out[nu] = reciprocal(p, int(rv.M))
    return Expansion(out)


def signed_star(n: int, kappa, lam: Weight, mu: Weight) -> Expansion:
    """``[lam] * [mu]`` for any nonzero kappa; negative kappa via duality and Tate twist."""
    kappa = as_rational(kappa)
    if kappa == 0:
        raise ValueError("kappa must be nonzero")
    if kappa > 0:
        return rep(n, kappa).star(lam, mu)
    return dual_kappa(rep(n, -kappa).star(lam, mu), [lam, mu])


@dataclass(frozen=True)
class PiImage:
    """``sign * monomial * [weight]`` or zero; ``image`` keeps the raw ring element."""

    sign: int
    monomial: HodgePoly
    weight: Optional[Weight]
    image: Optional[Expansion] = None
    single_term: bool = True

    @property
    def is_zero(self) -> bool:
        return self.weight is None

    def same_value(self, other: PiImage) -> bool:
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return (self.sign, self.monomial, self.weight) == (other.sign, other.monomial, other.weight)

    def to_json(self) -> dict:
        if self.is_zero:
            return {"zero": True, "single_term": self.single_term}
        return {
            "zero": False,
            "sign": self.sign,
            "monomial": self.monomial.to_json(),
            "weight": self.weight.to_json(),
            "single_term": self.single_term,
        }


def pi_map(n: int, level: int, b: int, lam: Weight) -> PiImage:
    """Image of ``[lam]`` under the algebra map sending each ``[varpi_i]`` to itself.

    A result that is not ``+-t^e [mu]`` is returned with ``single_term``
    false instead of raising.
    """
    if level < 1:
        raise ValueError("level must be at least 1")
    target = fusion(n, level, b)
    source = rep(n, target.kappa)
    image = _linear_combination(
        (c, target.apply_monomial(Weight.zero(n), mono))
        for mono, c in source.expand_in_fundamentals(lam).items()
    )
    if not image:
        return PiImage(0, ZERO, None, image)
    if len(image) == 1:
        (mu, p), = image.items()
        if p.is_monomial():
            (e, c), = p.terms.items()
            if abs(c) == 1:
                return PiImage(c, HodgePoly.monomial(e), mu, image)
    return PiImage(0, ZERO, None, image, single_term=False)


def pi_predict(n: int, level: int, variant: str, lam: Weight) -> PiImage:
    """Conjectured image: ``eps(w) t^{s(lam - mu)} [mu]`` or ``eps(w) t^{l(w)} [mu]``."""
    fold: AlcoveFold = affine_fold(n, level, lam)
    if fold.result is None:
        return PiImage(0, ZERO, None)
    mu = fold.result
    if variant == "standard":
        s = s_value(n, [a - b for a, b in zip(lam.vec, mu.vec)])
        if s.denominator != 1 or s < 0:
            raise ArithmeticError(f"s({lam} - {mu}) = {s} is not a natural number")
        e = int(s)
    elif variant == "conjugate":
        e = fold.length
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return PiImage(fold.sign, HodgePoly.monomial(e), mu)


def galois_for_variant(n: int, level: int, variant: str) -> int:
    if variant == "standard":
        return 1
    if variant == "conjugate":
        return level + n - 1
    raise ValueError(f"unknown variant {variant!r}")


def clear_caches():
    """Forget every ring context and its memo tables."""
    _context.cache_clear()
