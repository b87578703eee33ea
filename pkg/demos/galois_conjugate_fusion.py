"""Fusion Hodge polynomials over all Galois twists, and local exponents.

For sl_4 at level 8 the units mod 12 are 1, 5, 7, 11.  Each twist gives a
monomial, so each conjugate local system is pure, and b and 12 - b are
exchanged by t^M P(1/t).
"""
from kzring import Weight, checks, local_exponents

W = lambda *p: Weight.of(4, p)
lams = [W(5, 2, 2), W(5, 2, 2), W(6, 3, 0), W(1, 0, 0)]

report = checks.check_weight_bounds_galois(4, 8, lams, W(0, 0, 0))
print("M =", report.params["M"], " status:", report.status)
for rec in report.records:
    print(f"b = {rec['galois']:>2}: {rec['poly']}  weights {rec['window']}")

print()
print("exponents where the first two points collide (kappa = 12):")
for e in local_exponents(4, 12, [W(5, 2, 2), W(1, 0, 0)]):
    print(f"  [{e.target}]  exponent {e.exponent}  mod 1 = {e.residue}")
