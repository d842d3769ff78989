"""
Several forbidden distances
===========================

Compositions of integer vectors, their step profiles, and the best bound
over compositions with up to r + 1 coordinate values.
"""

import math

from distbounds import multi

# A composition v says which share of coordinates takes each value 0..r.
# The step profile g gives the largest and smallest inner products per
# coordinate as two integrals.
v = (0.2, 0.5, 0.3)
prof = multi.step_profile(v)
print(f"v={v}  largest {prof.s_bar:.4f}  smallest {prof.s_under:.4f}")

# Reversing v is the substitution x -> r - x: the gap between the two
# integrals, and so the bound, does not move.
rev = multi.step_profile(v[::-1])
print(f"reversed gap {rev.s_bar - rev.s_under:.4f} vs {prof.s_bar - prof.s_under:.4f}")

# The inner problem is an entropy minimum under a mean constraint; when the
# constraint binds the minimizer is geometric.
res = multi.min_entropy_constrained(4, 1.1)
print("geometric minimizer", [round(x, 4) for x in res.eta], f"ratio {res.lam:.4f}")

# Outer search over compositions.
for k, m in [(5, 1), (5, 2), (8, 3), (10, 3)]:
    best = multi.best_bound(k, m, r_max=4)
    print(f"k={k:>2} m={m}  {best.value:.6f} at r={best.r}  v*={[round(x, 4) for x in best.v_star]}")

print(f"\nwith k = 2 the entropy term vanishes: rho = {multi.rho_of_v(v, 2, 1):.4f} <= 0")
print(f"log of the m=1, k=5 bound: {math.log(multi.best_bound(5, 1, r_max=1).value):.3e}")
