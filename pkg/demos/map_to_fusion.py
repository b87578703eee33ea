"""Pushing a class from the representation ring to the fusion ring.

The map fixes the fundamental classes.  For sl_2 its value on [p w] is a
signed monomial times the class obtained by folding p w + rho into the
alcove; the exponent is s(lambda - mu) for b = 1 and the folding length
for the conjugate twist.
"""
from kzring import Weight, pi_map, pi_predict

level = 3
for variant, b in (("standard", 1), ("conjugate", level + 1)):
    print(f"{variant} (b = {b}):")
    for p in range(0, 14):
        lam = Weight.of(2, (p,))
        got = pi_map(2, level, b, lam)
        want = pi_predict(2, level, variant, lam)
        shown = "0" if got.is_zero else f"{'+' if got.sign > 0 else '-'}{got.monomial} [{got.weight}]"
        print(f"  [{p}w] -> {shown:<16} {'ok' if got.same_value(want) else 'DIFFERS'}")

print()
lam = Weight.of(3, (4, 1))
for b in (1, 4):
    img = pi_map(3, 2, b, lam)
    print(f"sl_3 level 2, b = {b}: [{lam}] ->", img.to_json())
