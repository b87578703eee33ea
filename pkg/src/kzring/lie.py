"""Type A weight combinatorics.

Dominant weights of sl_n are stored as partitions with ``n - 1`` parts;
internally most routines work with the length-``n`` vector of
L-coordinates (the partition padded by a trailing zero).  Two vectors
that differ by a multiple of ``(1, ..., 1)`` are the same sl_n weight.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional, Sequence, Union

__all__ = [
    "Weight",
    "RootVector",
    "AlcoveFold",
    "pairing",
    "casimir",
    "dual",
    "root_decompose",
    "s_value",
    "pieri_subset",
    "classical_pieri",
    "lr_tensor",
    "weyl_dimension",
    "affine_fold",
    "alcove_distance",
    "fusion_tensor",
    "dominant_weights",
]


@dataclass(frozen=True, order=True)
class Weight:
    """A dominant integral weight of sl_n as a partition ``(a_1, ..., a_{n-1})``."""

    n: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"rank n must be at least 2, got {self.n}")
        parts = tuple(int(a) for a in self.parts)
        if len(parts) != self.n - 1:
            raise ValueError(f"sl_{self.n} weight needs {self.n - 1} parts, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])) or (parts and parts[-1] < 0):
            raise ValueError(f"{parts} is not a weakly decreasing partition")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, n: int, parts: Sequence[int]) -> Weight:
        """Build from up to ``n`` parts; shorter lists are zero padded, ``n`` parts are normalized."""
        parts = list(parts)
        if len(parts) > n:
            raise ValueError(f"too many parts {parts} for sl_{n}")
        parts += [0] * (n - len(parts))
        return cls.from_vector(n, parts)

    @classmethod
    def from_vector(cls, n: int, vec: Sequence[int]) -> Weight:
        """Normalize a length-``n`` L-coordinate vector by subtracting its last entry."""
        if len(vec) != n:
            raise ValueError(f"expected {n} coordinates, got {len(vec)}")
        last = vec[-1]
        return cls(n, tuple(int(x) - last for x in vec[:-1]))

    @classmethod
    def zero(cls, n: int) -> Weight:
        return cls(n, (0,) * (n - 1))

    @classmethod
    def fundamental(cls, n: int, k: int) -> Weight:
        if not 1 <= k <= n - 1:
            raise ValueError(f"fundamental weight index {k} out of range for sl_{n}")
        return cls(n, (1,) * k + (0,) * (n - 1 - k))

    @classmethod
    def rho(cls, n: int) -> Weight:
        return cls(n, tuple(range(n - 1, 0, -1)))

    @classmethod
    def theta(cls, n: int) -> Weight:
        return cls.from_vector(n, (1,) + (0,) * (n - 2) + (-1,))

    @classmethod
    def from_dynkin(cls, n: int, labels: Sequence[int]) -> Weight:
        """Weight ``sum labels[i] * varpi_{i+1}``."""
        parts = [sum(labels[i:]) for i in range(n - 1)]
        return cls(n, tuple(parts))

    @property
    def vec(self) -> tuple[int, ...]:
        return self.parts + (0,)

    @property
    def level(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def boxes(self) -> int:
        return sum(self.parts)

    @property
    def dynkin(self) -> tuple[int, ...]:
        v = self.vec
        return tuple(v[i] - v[i + 1] for i in range(self.n - 1))

    def is_zero(self) -> bool:
        return not any(self.parts)

    def __add__(self, other: Weight) -> Weight:
        _same_rank(self, other)
        return Weight(self.n, tuple(a + b for a, b in zip(self.parts, other.parts)))

    def shift(self, i: int, amount: int = 1) -> Optional[Weight]:
        """Add ``amount * L_i`` (1-based); ``None`` if the result is not dominant."""
        v = list(self.vec)
        v[i - 1] += amount
        if any(a < b for a, b in zip(v, v[1:])):
            return None
        return Weight.from_vector(self.n, v)

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class RootVector:
    """Coefficients of a weight difference over the simple roots."""

    n: int
    coeffs: tuple[Fraction, ...]

    @property
    def M(self) -> Fraction:
        return sum(self.coeffs, Fraction(0))

    def is_nonnegative_integral(self) -> bool:
        return all(c >= 0 and c.denominator == 1 for c in self.coeffs)

    def to_vector(self) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * self.n
        for i, c in enumerate(self.coeffs):
            out[i] += c
            out[i + 1] -= c
        return tuple(out)


@dataclass(frozen=True)
class AlcoveFold:
    """Outcome of folding ``lambda + rho`` into the fundamental alcove.

    ``result`` is ``None`` when the point lies on an affine wall; the sign
    is then 0, standing for the zero class.
    """

    result: Optional[Weight]
    sign: int
    length: int


WeightLike = Union[Weight, RootVector, Sequence]


def _same_rank(x: Weight, y: Weight):
    if x.n != y.n:
        raise ValueError(f"rank mismatch: sl_{x.n} vs sl_{y.n}")


def _as_vector(n: int, x: WeightLike) -> tuple:
    if isinstance(x, Weight):
        if x.n != n:
            raise ValueError(f"rank mismatch: sl_{n} vs sl_{x.n}")
        return x.vec
    if isinstance(x, RootVector):
        if x.n != n:
            raise ValueError(f"rank mismatch: sl_{n} vs sl_{x.n}")
        return x.to_vector()
    x = tuple(x)
    if len(x) != n:
        raise ValueError(f"expected {n} L-coordinates, got {len(x)}")
    return x


def pairing(n: int, x: WeightLike, y: WeightLike) -> Fraction:
    """Invariant form with ``(L_i, L_j) = delta_ij - 1/n``, so ``(theta, theta) = 2``."""
    xv = _as_vector(n, x)
    yv = _as_vector(n, y)
    dot = sum(Fraction(a) * b for a, b in zip(xv, yv))
    return dot - Fraction(sum(xv)) * sum(yv) / n


def casimir(n: int, lam: Weight) -> Fraction:
    """``c(lam) = (lam, lam + 2 rho)``."""
    v = lam.vec
    shifted = [a + 2 * r for a, r in zip(v, range(n - 1, -1, -1))]
    return pairing(n, v, shifted)


def dual(n: int, lam: Weight) -> Weight:
    """The highest weight of the dual representation, ``-w_0 lam``."""
    v = lam.vec
    return Weight.from_vector(n, [v[0] - x for x in reversed(v)])


def _root_coeffs(n: int, vec: Sequence) -> Optional[tuple[Fraction, ...]]:
    shift = Fraction(sum(vec), n)
    d = [Fraction(x) - shift for x in vec]
    coeffs = []
    acc = Fraction(0)
    for i in range(n - 1):
        acc += d[i]
        coeffs.append(acc)
    return tuple(coeffs)


def s_value(n: int, vec: Sequence) -> Fraction:
    """Sum of simple-root coefficients of a weight given in L-coordinates."""
    return sum(_root_coeffs(n, vec), Fraction(0))


def root_decompose(n: int, lambdas: Sequence[Weight], nu: Weight) -> Optional[RootVector]:
    """Write ``sum(lambdas) - nu`` over simple roots; ``None`` unless coefficients are in N."""
    total = [0] * n
    for lam in lambdas:
        for i, a in enumerate(_as_vector(n, lam)):
            total[i] += a
    for i, a in enumerate(_as_vector(n, nu)):
        total[i] -= a
    rv = RootVector(n, _root_coeffs(n, total))
    return rv if rv.is_nonnegative_integral() else None


def pieri_subset(lam: Weight, k: int, mu: Weight) -> Optional[frozenset[int]]:
    """The row set ``K`` (1-based, ``|K| = k``) with ``mu = lam + sum_{i in K} L_i``.

    Returns ``None`` when ``mu`` is not a summand of ``V_lam (x) V_{varpi_k}``.
    """
    _same_rank(lam, mu)
    n = lam.n
    diff = [b - a for a, b in zip(lam.vec, mu.vec)]
    total = sum(diff)
    if total == k - n:
        diff = [d + 1 for d in diff]
    elif total != k:
        return None
    if any(d not in (0, 1) for d in diff):
        return None
    return frozenset(i + 1 for i, d in enumerate(diff) if d)


def pieri_count(n: int, k: int, rows: frozenset[int]) -> int:
    """Number of simple roots in ``L_1 + ... + L_k - sum_{i in rows} L_i``."""
    m = 0
    inside = 0
    for j in range(1, n):
        inside += j in rows
        m += min(j, k) - inside
    return m


def classical_pieri(n: int, lam: Weight, k: int) -> list[Weight]:
    """Summands of ``V_lam (x) V_{varpi_k}``, each of multiplicity one."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} out of range for sl_{n}")
    v = lam.vec
    out = []
    for rows in combinations(range(n), k):
        w = list(v)
        for i in rows:
            w[i] += 1
        if all(a >= b for a, b in zip(w, w[1:])):
            out.append(Weight.from_vector(n, w))
    return sorted(set(out), reverse=True)


def _lr_shapes(lam: Sequence[int], content: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Outer shapes (one per tableau) of LR tableaux of shape nu/lam and given content.

    Rows are filled top to bottom; a row holds a weakly increasing run of
    letters.  Columns must strictly increase and the row-reading word,
    right to left and top to bottom, must be a lattice word.
    """
    nrows = len(lam)
    letters = len(content)
    total = sum(content)

    def fill_row(r, col, letter, top, limit, old, new, above, row):
        if letter > top:
            yield col, new, row
            return
        cap = min(content[letter - 1] - new[letter - 1], limit - col)
        if letter >= 2:
            cap = min(cap, old[letter - 2] - new[letter - 1])
        yield from fill_row(r, col, letter + 1, top, limit, old, new, above, row)
        for c in range(1, cap + 1):
            j = col + c - 1
            if above.get(j, 0) >= letter:
                break
            bumped = list(new)
            bumped[letter - 1] += c
            placed = dict(row)
            for jj in range(col, col + c):
                placed[jj] = letter
            yield from fill_row(r, col + c, letter + 1, top, limit, old, bumped, above, placed)

    def rec(r, prev_nu, above, counts):
        if r == nrows:
            if list(counts) == list(content):
                yield ()
            return
        lam_r = lam[r]
        remaining = total - sum(counts)
        limit = lam_r + remaining if r == 0 else min(prev_nu, lam_r + remaining)
        if limit < lam_r:
            return
        top = min(r + 1, letters)
        for end, new, row in fill_row(r, lam_r, 1, top, limit, counts, list(counts), above, {}):
            for rest in rec(r + 1, end, row, new):
                yield (end,) + rest

    yield from rec(0, None, {}, [0] * letters)


def lr_tensor(n: int, lam: Weight, mu: Weight) -> dict[Weight, int]:
    """Tensor product multiplicities from Littlewood-Richardson tableaux."""
    _same_rank(lam, mu)
    content = tuple(a for a in mu.parts if a)
    out: dict[Weight, int] = {}
    if not content:
        return {lam: 1}
    for nu in _lr_shapes(lam.vec, content):
        w = Weight.from_vector(n, list(nu))
        out[w] = out.get(w, 0) + 1
    return dict(sorted(out.items(), reverse=True))


def weyl_dimension(n: int, lam: Weight) -> int:
    x = [a + r for a, r in zip(lam.vec, range(n - 1, -1, -1))]
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= x[i] - x[j]
            den *= j - i
    return num // den


def alcove_distance(n: int, level: int, x: Sequence[int]) -> int:
    """Number of affine walls separating ``x`` from the fundamental alcove."""
    big = level + n
    return sum(
        abs(math.floor(Fraction(x[i] - x[j], big)))
        for i in range(n)
        for j in range(i + 1, n)
    )


def affine_fold(n: int, level: int, lam: Union[Weight, Sequence[int]]) -> AlcoveFold:
    """Fold ``lam + rho`` into the level-``level`` fundamental alcove.

    Each step reflects in a wall of the fundamental alcove that separates
    the current point from it: the lowest-index violated simple reflection
    first, the affine reflection last.  Every such step lowers the length
    by one, so the step count is the minimal length.
    """
    if level < 0:
        raise ValueError("level must be nonnegative")
    big = level + n
    base = lam.vec if isinstance(lam, Weight) else tuple(int(a) for a in lam)
    if len(base) != n:
        raise ValueError(f"expected {n} coordinates")
    x = [a + r for a, r in zip(base, range(n - 1, -1, -1))]
    steps = 0
    while True:
        for i in range(n - 1):
            if x[i] < x[i + 1]:
                x[i], x[i + 1] = x[i + 1], x[i]
                steps += 1
                break
        else:
            if x[0] - x[-1] > big:
                x[0], x[-1] = x[-1] + big, x[0] - big
                steps += 1
                continue
            break
    if any(x[i] == x[i + 1] for i in range(n - 1)) or x[0] - x[-1] == big:
        return AlcoveFold(None, 0, 0)
    mu = Weight.from_vector(n, [a - r for a, r in zip(x, range(n - 1, -1, -1))])
    return AlcoveFold(mu, -1 if steps % 2 else 1, steps)


def fusion_tensor(n: int, level: int, lam: Weight, mu: Weight) -> dict[Weight, int]:
    """Level-``level`` fusion multiplicities by signed affine folding of ``lr_tensor``."""
    if lam.level > level or mu.level > level:
        raise ValueError(f"inputs {lam}, {mu} exceed level {level}")
    acc: dict[Weight, int] = {}
    for gamma, mult in lr_tensor(n, lam, mu).items():
        fold = affine_fold(n, level, gamma)
        if fold.result is None:
            continue
        acc[fold.result] = acc.get(fold.result, 0) + fold.sign * mult
    if any(c < 0 for c in acc.values()):
        raise ArithmeticError(f"negative fusion coefficient in {lam} x {mu}: {acc}")
    return {w: c for w, c in sorted(acc.items(), reverse=True) if c}


def dominant_weights(n: int, max_boxes: Optional[int] = None, max_level: Optional[int] = None) -> Iterator[Weight]:
    """All dominant weights bounded by box count and/or level, in increasing order."""
    if max_boxes is None and max_level is None:
        raise ValueError("need a bound")
    top = max_level if max_level is not None else max_boxes

    def gen(prefix, remaining_parts, cap, boxes_left):
        if remaining_parts == 0:
            yield tuple(prefix)
            return
        for a in range(0, cap + 1):
            if boxes_left is not None and a > boxes_left:
                break
            yield from gen(
                prefix + [a], remaining_parts - 1, a,
                None if boxes_left is None else boxes_left - a,
            )

    out = []
    for first in range(0, top + 1):
        if max_boxes is not None and first > max_boxes:
            break
        for rest in gen([], n - 2, first, None if max_boxes is None else max_boxes - first):
            out.append(Weight(n, (first,) + rest))
    yield from sorted(out, key=lambda w: (w.boxes, w.parts))
