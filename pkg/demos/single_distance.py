"""
One forbidden distance
======================

Lower bounds on the exponential growth of chromatic numbers of distance
graphs with no k-clique, computed three ways.
"""

from distbounds import single

# The triangle-free constant comes from a single closed form.
t3 = single.theorem3_bound()
print(f"triangle-free base: {t3.value:.8f}")

# The coding bound optimizes a two-parameter family and gets stronger with k.
for k in (5, 6, 10, 20, 60):
    res = single.theorem4_optimize(k)
    print(f"k={k:>3}  coding bound {res.value:.5f}  at b={res.params['b']:.4f} a={res.params['a']:.4f}")

# The random-subgraph bounds: one parameter with (0,1)-vectors, two with
# (-1,0,1)-vectors.  The second overtakes the first just after k = 10.
print("\n  k   (0,1)       (-1,0,1)")
for k in range(8, 14):
    six = single.theorem6_optimize(k).value
    seven = single.theorem7_optimize(k).value
    flag = "<" if six < seven else ">"
    print(f"{k:>3}   {six:.8f} {flag} {seven:.8f}")

# The infimum of the admissible set has a closed form; a scan of the
# defining predicate agrees with it.
p = single.theorem6_params(0.25, 40)
print(f"\nc closed form {single.infimum_c(p.tau0, p.tau1, 40):.9f}"
      f"  scan {single.infimum_c_scan(p.tau0, p.tau1, 40):.9f}")
