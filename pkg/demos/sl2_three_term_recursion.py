"""sl_2: products are driven by S_p * S = S_{p+1} + d(p) S_{p-1}.

Each d(p) is 1 or t.  Iterating gives every n-point coefficient; at
kappa = 2 the three-fold product of 2w has the sequence t, 2t+1, 2, 1.
"""
from kzring import Weight, delmos, rep

S = lambda p: Weight.of(2, (p,))

for kappa in (2, 3, "5/2"):
    ctx = rep(2, kappa)
    ds = [str(delmos(p, ctx.kappa)) for p in range(1, 13)]
    print(f"kappa = {ctx.kappa}: d(1..12) =", " ".join(ds))

print()
ctx = rep(2, 2)
for nu in (0, 2, 4, 6):
    print(f"[2w]^3 at [{nu}w]:", ctx.npoint([S(2)] * 3, S(nu)))
