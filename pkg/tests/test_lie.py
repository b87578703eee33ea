from collections import deque
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from kzring.lie import (
    Weight,
    affine_fold,
    alcove_distance,
    casimir,
    classical_pieri,
    dominant_weights,
    dual,
    fusion_tensor,
    lr_tensor,
    pairing,
    pieri_count,
    pieri_subset,
    root_decompose,
    s_value,
    weyl_dimension,
)


def W(*parts):
    return Weight.of(len(parts) + 1, parts)


def test_weight_normalization_and_validation():
    assert Weight.of(3, [7, 5, 2]) == W(5, 3)
    assert Weight.of(4, [1]) == W(1, 0, 0)
    assert W(3, 1).dynkin == (2, 1)
    assert Weight.from_dynkin(4, (2, 1, 0)) == W(3, 1, 0)
    assert W(4, 2).level == 4 and W(4, 2).boxes == 6
    with pytest.raises(ValueError):
        Weight(3, (1, 2))
    with pytest.raises(ValueError):
        Weight(3, (1,))
    with pytest.raises(ValueError):
        Weight.of(2, [1, 2, 3])


def test_shift_keeps_dominance():
    assert W(2, 1).shift(2) == W(2, 2)
    assert W(2, 2).shift(2) is None
    assert W(1, 0).shift(3, -1) == W(2, 1)


def test_pairing_and_casimir():
    assert pairing(2, W(1), W(1)) == Fraction(1, 2)
    assert casimir(4, Weight.theta(4)) == 8
    assert casimir(2, W(2)) == 4
    assert casimir(3, W(0, 0)) == 0


def test_dual_is_an_involution():
    for lam in dominant_weights(4, max_boxes=6):
        assert dual(4, dual(4, lam)) == lam
    assert dual(3, W(2, 0)) == W(2, 2)


def test_root_decomposition():
    rv = root_decompose(4, [W(3, 3, 1), W(3, 2, 1), W(3, 2, 2), W(1, 1, 0)], W(3, 3, 0))
    assert rv.is_nonnegative_integral() and rv.M == 11
    assert root_decompose(3, [W(7, 5), W(9, 5)], W(8, 6)).M == 8
    assert root_decompose(3, [W(1, 0)], W(0, 0)) is None
    assert s_value(2, (2, -2)) == 2


def test_pieri_subset_and_count():
    assert pieri_subset(W(2, 1, 0), 2, W(3, 1, 1)) == frozenset({1, 3})
    assert pieri_subset(W(2, 1, 0), 2, W(2, 2, 2)) is None
    assert pieri_count(4, 2, frozenset({1, 2})) == 0
    assert pieri_count(4, 1, frozenset({3})) == 2


def test_classical_pieri_matches_lr():
    for n in (2, 3, 4, 5):
        for lam in dominant_weights(n, max_boxes=4):
            for k in range(1, n):
                assert lr_tensor(n, lam, Weight.fundamental(n, k)) == {
                    mu: 1 for mu in classical_pieri(n, lam, k)
                }


def test_lr_known_values():
    assert lr_tensor(4, W(1, 1, 0), W(1, 1, 0)) == {W(2, 2, 0): 1, W(2, 1, 1): 1, W(0, 0, 0): 1}
    assert lr_tensor(2, W(3), W(2)) == {W(5): 1, W(3): 1, W(1): 1}
    assert lr_tensor(3, W(7, 5), W(9, 5))[W(8, 6)] == 3
    assert lr_tensor(3, W(2, 1), W(2, 1))[W(2, 1)] == 2


def test_lr_dimensions_match_weyl_formula():
    for n in (2, 3, 4):
        ws = list(dominant_weights(n, max_boxes=4))
        for a in ws:
            for b in ws:
                prod = lr_tensor(n, a, b)
                assert sum(m * weyl_dimension(n, c) for c, m in prod.items()) == (
                    weyl_dimension(n, a) * weyl_dimension(n, b)
                )


def test_lr_is_commutative():
    ws = list(dominant_weights(4, max_boxes=4))
    for a, b in combinations(ws, 2):
        assert lr_tensor(4, a, b) == lr_tensor(4, b, a)


def sl2_fusion(level, p, q):
    return {W(r): 1 for r in range(abs(p - q), min(p + q, 2 * level - p - q) + 1, 2)}


def test_fusion_matches_sl2_closed_rule():
    for level in range(1, 7):
        for p in range(level + 1):
            for q in range(level + 1):
                assert fusion_tensor(2, level, W(p), W(q)) == sl2_fusion(level, p, q)


def test_fusion_rejects_high_level():
    with pytest.raises(ValueError):
        fusion_tensor(3, 2, W(3, 0), W(1, 0))


def test_fusion_ranks_at_large_level_agree_with_lr():
    a, b = W(2, 1, 0), W(1, 1, 0)
    assert fusion_tensor(4, 10, a, b) == lr_tensor(4, a, b)


def brute_fold_length(n, level, x):
    """Minimal number of reflections s_0, ..., s_{n-1} moving x into the open alcove."""
    big = level + n

    def inside(y):
        return all(y[i] > y[i + 1] for i in range(n - 1)) and y[0] - y[-1] < big

    def moves(y):
        for i in range(n - 1):
            z = list(y)
            z[i], z[i + 1] = z[i + 1], z[i]
            yield tuple(z)
        z = list(y)
        z[0], z[-1] = y[-1] + big, y[0] - big
        yield tuple(z)

    start = tuple(x)
    seen = {start: 0}
    queue = deque([start])
    while queue:
        y = queue.popleft()
        if inside(y):
            return seen[y]
        for z in moves(y):
            if z not in seen:
                seen[z] = seen[y] + 1
                queue.append(z)
    raise AssertionError("unreachable")


def test_fold_length_is_minimal():
    for n, level in ((2, 2), (3, 1), (3, 2), (4, 1)):
        rho = Weight.rho(n).vec
        for lam in dominant_weights(n, max_boxes=9):
            fold = affine_fold(n, level, lam)
            if fold.result is not None:
                x = [a + r for a, r in zip(lam.vec, rho)]
                assert fold.length == brute_fold_length(n, level, x)


def test_fold_examples_sl2():
    # level 2, alcove point p+1 in {1, 2, 3}; reflection about 4
    assert affine_fold(2, 2, W(3)).sign == 0
    assert affine_fold(2, 2, W(3)).result is None
    assert affine_fold(2, 2, W(4)).result == W(2) and affine_fold(2, 2, W(4)).sign == -1
    assert affine_fold(2, 2, W(6)).result == W(0) and affine_fold(2, 2, W(6)).length == 1
    assert affine_fold(2, 2, W(8)).result == W(0) and affine_fold(2, 2, W(8)).sign == 1
    assert affine_fold(2, 2, W(1)).result == W(1) and affine_fold(2, 2, W(1)).sign == 1
    assert affine_fold(2, 2, W(1)).length == 0


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 5), st.integers(1, 6), st.lists(st.integers(0, 30), min_size=4, max_size=4))
def test_fold_length_matches_closed_form(n, level, raw):
    parts = sorted(raw[: n - 1], reverse=True)
    lam = Weight.of(n, parts)
    fold = affine_fold(n, level, lam)
    x = [a + r for a, r in zip(lam.vec, Weight.rho(n).vec)]
    if fold.result is None:
        assert fold.sign == 0
    else:
        assert fold.length == alcove_distance(n, level, x)
        assert fold.result.level <= level


def test_dominant_weights_enumeration():
    ws = list(dominant_weights(3, max_boxes=2))
    assert ws == [W(0, 0), W(1, 0), W(1, 1), W(2, 0)]
    assert len(list(dominant_weights(4, max_level=1))) == 4
