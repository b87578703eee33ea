"""Top coefficients of a KZ Hodge polynomial against fusion ranks.

At kappa = level + n, summing the coefficients of t^M, t^(M-1), ...
should reproduce the conformal-block ranks at levels level+1, level+2, ...
The rank-4 example below has M = 11.
"""
from kzring import Weight, checks, rep

W = lambda *p: Weight.of(4, p)
lams = [W(3, 3, 1), W(3, 2, 1), W(3, 2, 2), W(1, 1, 0)]
nu = W(3, 3, 0)

print("kappa = 7  :", rep(4, 7).npoint(lams, nu))
print("kappa = 7/6:", rep(4, "7/6").npoint(lams, nu))

report = checks.check_hodge_filtration(4, 3, lams, nu)
for rec in report.records:
    print(f"level {rec['level']}: partial sum {rec['partial_sum']:>3}, fusion rank {rec['fusion_rank']:>3}")

print("fusion rank at level 3:", checks.fusion_rank(4, 3, lams, nu))
