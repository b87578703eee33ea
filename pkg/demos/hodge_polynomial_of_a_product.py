"""A single structure constant of the enriched representation ring of sl_3.

Classically V(7,5) x V(9,5) contains V(8,6) three times.  The enriched
product refines that 3 into a Hodge polynomial, and the complex conjugate
parameter gives the conjugate polynomial.  Together they bound the weights.
"""
from fractions import Fraction

from kzring import Weight, lr_tensor, rep, weight_bounds

lam, mu, nu = Weight.of(3, (7, 5)), Weight.of(3, (9, 5)), Weight.of(3, (8, 6))

print("classical multiplicity:", lr_tensor(3, lam, mu)[nu])

p = rep(3, 13).star(lam, mu).coeff(nu)
q = rep(3, Fraction(13, 12)).star(lam, mu).coeff(nu)
print("kappa = 13     :", p)
print("kappa = 13/12  :", q)
print("both specialise to", p.eval_at_one(), "at t = 1")

lo, hi = weight_bounds(p, q)
print(f"weights lie in [{lo}, {hi}]")

# The whole product, term by term.
print()
for w, poly in rep(3, 13).star(lam, mu).items():
    if poly.degree >= 8:
        print(f"  [{w}]  {poly}")
