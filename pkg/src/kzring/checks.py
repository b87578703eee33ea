"""Executable consistency checks and exploratory reports.

Each check returns a :class:`CheckReport`.  Pass/fail checks are
deterministic given their inputs and seed; report-only checks record
their comparisons and never fail.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .core import ONE, BigradedPoly, HodgePoly, as_rational, reciprocal
from .lie import (
    Weight,
    affine_fold,
    alcove_distance,
    classical_pieri,
    dominant_weights,
    dual,
    fusion_tensor,
    lr_tensor,
    root_decompose,
    s_value,
)
from .motive import delmos, weight_bounds
from .ring import (
    Expansion,
    RingContext,
    dual_kappa,
    fusion,
    galois_for_variant,
    pi_map,
    pi_predict,
    rep,
)

PASS = "pass"
FAIL = "fail"
REPORT_ONLY = "report-only"


@dataclass
class CheckReport:
    name: str
    cases_run: int = 0
    failures: list[dict] = field(default_factory=list)
    report_only: bool = False
    seed: Optional[int] = None
    params: dict = field(default_factory=dict)
    records: list[dict] = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.report_only:
            return REPORT_ONLY
        return FAIL if self.failures else PASS

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def case(self, ok: bool, inputs, expected, actual):
        self.cases_run += 1
        if not ok:
            self.failures.append(
                {"inputs": _jsonable(inputs), "expected": _jsonable(expected), "actual": _jsonable(actual)}
            )

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "cases_run": self.cases_run,
            "failures": self.failures,
            "seed": self.seed,
            "params": _jsonable(self.params),
            "records": self.records,
        }


def _jsonable(x):
    if isinstance(x, (Weight, HodgePoly, BigradedPoly, Expansion)):
        return x.to_json()
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _tensor_json(d: dict[Weight, int]) -> list:
    return [[w.to_json(), m] for w, m in sorted(d.items(), reverse=True)]


@dataclass(frozen=True)
class SampleSpec:
    """How to draw operands: weights with at most ``max_boxes`` boxes, ``samples`` draws."""

    max_boxes: int = 4
    samples: int = 200
    seed: int = 0

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def _pool(ctx_or_n, spec: SampleSpec) -> list[Weight]:
    if isinstance(ctx_or_n, RingContext):
        n, level = ctx_or_n.n, ctx_or_n.level
    else:
        n, level = ctx_or_n, None
    return list(dominant_weights(n, max_boxes=spec.max_boxes, max_level=level))


def _draw(rng: random.Random, pool: Sequence[Weight], k: int, count: int) -> list[tuple[Weight, ...]]:
    return [tuple(rng.choice(pool) for _ in range(k)) for _ in range(count)]


def _params(ctx: RingContext, spec: SampleSpec, **extra) -> dict:
    out = {"n": ctx.n, "mode": _mode_json(ctx), "max_boxes": spec.max_boxes, "samples": spec.samples}
    out.update(extra)
    return out


def _mode_json(ctx: RingContext) -> dict:
    if ctx.is_fusion:
        return {"fusion": {"level": ctx.mode.level, "galois": ctx.mode.galois}}
    return {"rep": {"kappa": str(ctx.kappa)}}


def _bigraded(ctx: RingContext, a: Weight, b: Weight) -> dict[Weight, BigradedPoly]:
    return ctx.bigraded_star(a, b)


def _bigraded_triple(ctx: RingContext, a: Weight, b: Weight, c: Weight, left: bool) -> dict[Weight, BigradedPoly]:
    acc: dict[Weight, BigradedPoly] = {}
    if left:
        for g, p in _bigraded(ctx, a, b).items():
            for d, q in _bigraded(ctx, g, c).items():
                acc[d] = acc.get(d, BigradedPoly()) + p * q
    else:
        for g, p in _bigraded(ctx, b, c).items():
            for d, q in _bigraded(ctx, a, g).items():
                acc[d] = acc.get(d, BigradedPoly()) + p * q
    return {d: p for d, p in acc.items() if p}


def check_associativity(ctx: RingContext, spec: SampleSpec = SampleSpec()) -> CheckReport:
    """Commutativity of pairs and associativity of triples; bigraded too in fusion mode."""
    report = CheckReport("assoc", seed=spec.seed, params=_params(ctx, spec))
    pool = _pool(ctx, spec)
    rng = spec.rng()
    zero = Weight.zero(ctx.n)
    triples = [(zero, pool[-1], pool[len(pool) // 2])] + _draw(rng, pool, 3, spec.samples)
    for a, b, c in triples:
        ab = ctx.star(a, b)
        report.case(ab == ctx.star(b, a), ["commute", a, b], ab, ctx.star(b, a))
        left = ctx.multiply(ab, Expansion({c: ONE}))
        right = ctx.multiply(Expansion({a: ONE}), ctx.star(b, c))
        report.case(left == right, ["assoc", a, b, c], left, right)
        if ctx.is_fusion:
            bl = _bigraded_triple(ctx, a, b, c, True)
            br = _bigraded_triple(ctx, a, b, c, False)
            report.case(bl == br, ["bigraded-assoc", a, b, c], bl, br)
    return report


def check_bracketing(ctx: RingContext, spec: SampleSpec = SampleSpec()) -> CheckReport:
    """Four-fold products agree under all five bracketings."""
    report = CheckReport("bracketing", seed=spec.seed, params=_params(ctx, spec))
    pool = _pool(ctx, spec)
    rng = spec.rng()
    one = lambda w: Expansion({w: ONE})
    m = ctx.multiply
    for a, b, c, d in _draw(rng, pool, 4, spec.samples):
        A, B, C, D = one(a), one(b), one(c), one(d)
        ref = m(m(m(A, B), C), D)
        others = [m(m(A, B), m(C, D)), m(A, m(B, m(C, D))), m(m(A, m(B, C)), D), m(A, m(m(B, C), D))]
        for i, other in enumerate(others):
            report.case(other == ref, [f"bracketing-{i}", a, b, c, d], ref, other)
        nu = rng.choice(list(ref)) if ref else Weight.zero(ctx.n)
        report.case(ctx.npoint([a, b, c, d], nu) == ref.coeff(nu), ["npoint", a, b, c, d, nu], ref.coeff(nu), ctx.npoint([a, b, c, d], nu))
    return report


def check_classical_limit(ctx: RingContext, spec: SampleSpec = SampleSpec()) -> CheckReport:
    """``t = 1`` against Littlewood-Richardson (rep) or Kac-Walton (fusion) multiplicities."""
    report = CheckReport("classical", seed=spec.seed, params=_params(ctx, spec))
    pool = _pool(ctx, spec)
    rng = spec.rng()
    pairs = [(pool[-1], Weight.zero(ctx.n))] + _draw(rng, pool, 2, spec.samples)
    for a, b in pairs:
        got = ctx.star(a, b).at_one()
        want = fusion_tensor(ctx.n, ctx.level, a, b) if ctx.is_fusion else lr_tensor(ctx.n, a, b)
        report.case(got == want, [a, b], _tensor_json(want), _tensor_json(got))
    return report


def check_effectivity(ctx: RingContext, spec: SampleSpec = SampleSpec()) -> CheckReport:
    """Top coefficient ``[lam + mu]`` is 1; every coefficient is effective of degree at most ``M``."""
    report = CheckReport("effective", seed=spec.seed, params=_params(ctx, spec))
    pool = _pool(ctx, spec)
    rng = spec.rng()
    for a, b in _draw(rng, pool, 2, spec.samples):
        prod = ctx.star(a, b)
        top = a + b
        if ctx.in_alcove(top):
            report.case(prod.coeff(top) == ONE, ["top", a, b], ONE, prod.coeff(top))
        for nu, p in prod.items():
            rv = root_decompose(ctx.n, [a, b], nu)
            ok = (
                rv is not None
                and rv.is_nonnegative_integral()
                and p.is_nonnegative()
                and p.degree <= rv.M
            )
            report.case(ok, ["degree", a, b, nu], None if rv is None else str(rv.M), p)
    return report


def check_fusion_purity(n: int, level: int, spec: SampleSpec = SampleSpec()) -> CheckReport:
    """Untwisted fusion coefficients are ``rank * t^M``."""
    ctx = fusion(n, level, 1)
    report = CheckReport("fusion-purity", seed=spec.seed, params=_params(ctx, spec))
    pool = _pool(ctx, spec)
    rng = spec.rng()
    for a, b in _draw(rng, pool, 2, spec.samples):
        for nu, p in ctx.star(a, b).items():
            m = int(root_decompose(n, [a, b], nu).M)
            want = HodgePoly.monomial(m, p.eval_at_one())
            report.case(p == want, [a, b, nu], want, p)
    return report


def check_purity_integer_inverse(n: int, m: int, spec: SampleSpec = SampleSpec()) -> CheckReport:
    """At ``kappa = 1/m`` every coefficient is the constant classical multiplicity."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    ctx = rep(n, Fraction(1, m))
    report = CheckReport("purity", seed=spec.seed, params=_params(ctx, spec, m=m))
    pool = _pool(n, spec)
    rng = spec.rng()
    for a, b in _draw(rng, pool, 2, spec.samples):
        got = ctx.star(a, b)
        want = Expansion({w: HodgePoly(c) for w, c in lr_tensor(n, a, b).items()})
        report.case(got == want, [a, b], want, got)
    return report


def check_kappa_shift(n: int, kappa, spec: SampleSpec = SampleSpec()) -> CheckReport:
    """Products at ``kappa`` and ``kappa / (1 + kappa)`` coincide."""
    kappa = as_rational(kappa)
    if kappa <= 0:
        raise ValueError("kappa must be positive")
    c1, c2 = rep(n, kappa), rep(n, kappa / (1 + kappa))
    report = CheckReport("kappa-shift", seed=spec.seed, params=_params(c1, spec, shifted=str(c2.kappa)))
    pool = _pool(n, spec)
    rng = spec.rng()
    for a, b in _draw(rng, pool, 2, spec.samples):
        x, y = c1.star(a, b), c2.star(a, b)
        report.case(x == y, [a, b], x, y)
    return report


def check_negative_kappa(n: int, kappa, spec: SampleSpec = SampleSpec(), level: Optional[int] = None) -> CheckReport:
    """Reciprocal transport to ``-kappa`` is an involution; on fusion rings it is Galois conjugation.

    With ``level`` given, the untwisted fusion ring at that level is also
    compared with its conjugate ``b = level + n - 1``.
    """
    kappa = as_rational(kappa)
    ctx = rep(n, abs(kappa))
    report = CheckReport("negative-kappa", seed=spec.seed, params=_params(ctx, spec, level=level))
    pool = _pool(n, spec)
    rng = spec.rng()
    for a, b in _draw(rng, pool, 2, spec.samples):
        e = ctx.star(a, b)
        back = dual_kappa(dual_kappa(e, [a, b]), [a, b])
        report.case(back == e, ["involution", a, b], e, back)
    if level is not None:
        big = level + n
        for b in range(1, big):
            if math.gcd(b, big) != 1:
                continue
            f, fbar = fusion(n, level, b), fusion(n, level, big - b)
            fpool = [w for w in pool if w.level <= level]
            for x, y in _draw(rng, fpool, 2, max(1, spec.samples // 4)):
                want = fbar.star(x, y)
                got = dual_kappa(f.star(x, y), [x, y])
                report.case(got == want, ["conjugate", b, x, y], want, got)
    return report


def sl2_pi_monomial(level: int, b: int, p: int) -> HodgePoly:
    """Closed product of ``d_kappa(p')`` over the odd bands and the walls up to ``p``."""
    big = level + 2
    kappa = Fraction(big, b)
    out = ONE
    for q in range(1, p + 1):
        in_odd_band = (q // big) % 2 == 1 and q % big <= level
        on_wall = (q + 1) % big == 0
        if in_odd_band or on_wall:
            out = out * delmos(q, kappa)
    return out


def check_pi(n: int, level: int, variant: str, bound: int) -> CheckReport:
    """Image of ``[lam]`` in the fusion ring against its folding prediction.

    ``bound`` is the largest ``p`` for sl_2 and the box bound otherwise.
    For sl_2 this is pass/fail and also cross-checks the monomial against
    a closed product formula; for higher rank it is report-only.
    """
    b = galois_for_variant(n, level, variant)
    report = CheckReport(
        "pi",
        report_only=n > 2,
        params={"n": n, "level": level, "variant": variant, "galois": b, "bound": bound},
    )
    for lam in dominant_weights(n, max_boxes=bound):
        got = pi_map(n, level, b, lam)
        want = pi_predict(n, level, variant, lam)
        agree = got.same_value(want)
        report.case(agree, [lam], want.to_json(), got.to_json())
        if n > 2 and not agree:
            report.records.append({"weight": lam.to_json(), "predicted": want.to_json(), "computed": got.to_json()})
        if n == 2 and not got.is_zero:
            formula = sl2_pi_monomial(level, b, lam.parts[0])
            report.case(formula == got.monomial, ["product-formula", lam], formula, got.monomial)
    return report


def check_pi_multiplicative(n: int, level: int, b: int, spec: SampleSpec = SampleSpec()) -> CheckReport:
    """``pi(lam * mu) = pi(lam) * pi(mu)`` on sampled pairs."""
    src = rep(n, Fraction(level + n, b))
    dst = fusion(n, level, b)
    report = CheckReport("pi-mult", seed=spec.seed, params=_params(dst, spec))
    pool = _pool(n, spec)
    rng = spec.rng()
    image = lambda w: pi_map(n, level, b, w).image or Expansion()
    for a, c in _draw(rng, pool, 2, spec.samples):
        left = Expansion()
        for nu, p in src.star(a, c).items():
            left = left + image(nu).scale(p)
        right = dst.multiply(image(a), image(c))
        report.case(left == right, [a, c], right, left)
    return report


def fusion_rank(n: int, level: int, lambdas: Sequence[Weight], nu: Weight) -> int:
    """Kac-Walton multiplicity of ``nu`` in the iterated fusion product."""
    if any(w.level > level for w in list(lambdas) + [nu]):
        return 0
    acc = {lambdas[0]: 1}
    for lam in lambdas[1:]:
        nxt: dict[Weight, int] = {}
        for g, m in acc.items():
            for h, k in fusion_tensor(n, level, g, lam).items():
                nxt[h] = nxt.get(h, 0) + m * k
        acc = nxt
    return acc.get(nu, 0)


def check_hodge_filtration(n: int, level: int, lambdas: Sequence[Weight], nu: Weight, max_k: Optional[int] = None) -> CheckReport:
    """Top partial coefficient sums of the KZ polynomial against fusion ranks at higher levels.

    At ``kappa = level + n`` the ``k``-th record compares the sum of the
    coefficients of ``t^p`` for ``p >= M - k`` with the fusion rank at level
    ``level + k + 1``.  Report-only.
    """
    ctx = rep(n, level + n)
    poly = ctx.npoint(lambdas, nu)
    rv = root_decompose(n, lambdas, nu)
    m = int(rv.M) if rv is not None else 0
    report = CheckReport(
        "hodge-filtration",
        report_only=True,
        params={"n": n, "level": level, "lambdas": _jsonable(list(lambdas)), "nu": nu.to_json(), "M": m, "kz": poly.to_json()},
    )
    total = poly.eval_at_one()
    for k in range((m if max_k is None else max_k) + 1):
        partial = sum(poly.coeff(p) for p in range(m - k, m + 1))
        rank = fusion_rank(n, level + k + 1, lambdas, nu)
        report.cases_run += 1
        report.records.append({"k": k, "level": level + k + 1, "partial_sum": partial, "fusion_rank": rank, "agrees": partial == rank})
        if max_k is None and partial == total and rank == total:
            break
    return report


def check_weight_bounds_galois(n: int, level: int, lambdas: Sequence[Weight], nu: Weight) -> CheckReport:
    """Fusion polynomials over all Galois classes, with weight windows.

    Fails if conjugate classes are not reciprocal or the ranks differ.
    Records whether every conjugate is a monomial.
    """
    big = level + n
    units = [b for b in range(1, big) if math.gcd(b, big) == 1]
    polys = {b: fusion(n, level, b).npoint(lambdas, nu) for b in units}
    rv = root_decompose(n, lambdas, nu)
    m = int(rv.M) if rv is not None else 0
    report = CheckReport(
        "weight-bounds",
        params={"n": n, "level": level, "lambdas": _jsonable(list(lambdas)), "nu": nu.to_json(), "M": m},
    )
    ranks = {p.eval_at_one() for p in polys.values()}
    report.case(len(ranks) == 1, ["ranks"], "equal ranks", sorted(ranks))
    for b in units:
        conj = polys[big - b]
        report.case(reciprocal(polys[b], m) == conj, ["conjugate", b], conj, reciprocal(polys[b], m))
        rec = {"galois": b, "poly": polys[b].to_json()}
        if polys[b] and conj:
            rec["window"] = list(weight_bounds(polys[b], conj))
        report.records.append(rec)
    report.params["all_monomial"] = all(p.is_monomial() for p in polys.values() if p)
    report.params["finite_scalar_compatible"] = report.params["all_monomial"] and bool(ranks - {0})
    return report


def bgg_euler_report(n: int, level: int, gammas: Sequence[Weight], nu: Weight) -> CheckReport:
    """Alternating sum of KZ polynomials over the affine orbit of ``nu*`` beside the fusion polynomial.

    Report-only: the normalization of the conjectural identity is left open.
    """
    target = dual(n, nu)
    ctx = rep(n, level + n)
    product = ctx.product(list(gammas))
    terms = []
    total = HodgePoly()
    for lam, poly in product.items():
        fold = affine_fold(n, level, lam)
        if fold.result != target:
            continue
        s = s_value(n, [a - b for a, b in zip(lam.vec, target.vec)])
        twist = HodgePoly.monomial(int(s))
        sign = -1 if fold.length % 2 else 1
        total = total + poly * twist * sign
        terms.append({"weight": lam.to_json(), "sign": sign, "s": int(s), "kz": poly.to_json()})
    cb = fusion(n, level, 1).npoint(list(gammas), target) if target.level <= level and all(g.level <= level for g in gammas) else HodgePoly()
    report = CheckReport(
        "bgg",
        report_only=True,
        cases_run=len(terms),
        params={"n": n, "level": level, "gammas": _jsonable(list(gammas)), "nu": nu.to_json()},
    )
    report.records = terms + [{"alternating_sum": total.to_json(), "fusion": cb.to_json()}]
    return report


def check_fold_length(n: int, level: int, spec: SampleSpec = SampleSpec(samples=500, max_boxes=12)) -> CheckReport:
    """Step count of the folding walk against the closed-form alcove distance."""
    report = CheckReport("fold", seed=spec.seed, params={"n": n, "level": level, "max_boxes": spec.max_boxes, "samples": spec.samples})
    rho = Weight.rho(n).vec
    pool = list(dominant_weights(n, max_boxes=spec.max_boxes))
    rng = spec.rng()
    for lam in rng.sample(pool, min(spec.samples, len(pool))):
        fold = affine_fold(n, level, lam)
        x = [a + r for a, r in zip(lam.vec, rho)]
        want = alcove_distance(n, level, x)
        if fold.result is None:
            report.case(fold.sign == 0, [lam], "wall", fold.sign)
        else:
            report.case(fold.length == want, [lam], want, fold.length)
    return report


def check_pieri_truncation(n: int, level: int) -> CheckReport:
    """Kac-Walton fusion with a fundamental weight is the classical Pieri set cut to the alcove."""
    report = CheckReport("pieri-truncation", params={"n": n, "level": level})
    for lam in dominant_weights(n, max_level=level):
        for k in range(1, n):
            want = {mu: 1 for mu in classical_pieri(n, lam, k) if mu.level <= level}
            got = fusion_tensor(n, level, lam, Weight.fundamental(n, k))
            report.case(got == want, [lam, k], _tensor_json(want), _tensor_json(got))
            ring = fusion(n, level, 1).star_pieri(lam, k)
            report.case(set(ring) == set(want), ["ring", lam, k], _tensor_json(want), _tensor_json(ring.at_one()))
    return report


CHECKS: dict[str, Callable[..., CheckReport]] = {
    "assoc": check_associativity,
    "bracketing": check_bracketing,
    "classical": check_classical_limit,
    "effective": check_effectivity,
    "fusion-purity": check_fusion_purity,
    "purity": check_purity_integer_inverse,
    "kappa-shift": check_kappa_shift,
    "negative-kappa": check_negative_kappa,
    "pi": check_pi,
    "pi-mult": check_pi_multiplicative,
    "hodge-filtration": check_hodge_filtration,
    "weight-bounds": check_weight_bounds_galois,
    "bgg": bgg_euler_report,
    "fold": check_fold_length,
    "pieri-truncation": check_pieri_truncation,
}
