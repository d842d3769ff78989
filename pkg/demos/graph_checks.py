"""
Checking the constructions on small graphs
==========================================

Build the vector graphs behind the bounds and test their combinatorial
claims exhaustively.
"""

import numpy as np

from distbounds import graphlab as gl

# Weight-6 vectors in dimension 12, joined when they share exactly one
# coordinate.  With 12 < 3 * 5 there is no triangle.
G = gl.build_graph(12, 6, {1})
print(f"|V|={len(G)}  |E|={G.num_edges}  clique number {gl.clique_number(G)}")

# Any independent set gives a nonsingular evaluation matrix over F_5, which
# is what caps independent sets by a polynomial dimension count.
rng = np.random.default_rng(1)
W = gl.random_maximal_independent_set(G, rng)
print(f"maximal independent set of size {len(W)}: F_5 check {gl.fp_rank_check(G, W, 5)}")

# Disjointness graph on 5-subsets of 11 points: its shortest odd cycle is long.
K = gl.build_graph(11, 5, {0})
cycle = gl.shortest_odd_cycle(K)
print(f"odd girth {gl.odd_girth(K)}; step inequality violations:",
      gl.intersection_step_violations(K.vertices[cycle], 0))

# Even cycles, on the other hand, are easy to build explicitly.
w = gl.even_cycle_witness(20, 8, 3, 4)
print(f"{w.length}-cycle of weight-8 vectors with consecutive products 3: {gl.check_cycle_witness(w)}")

# Random edge deletion: the mean number of surviving cliques is the clique
# count times q^3.
H = gl.build_graph(8, 4, {2})
rep = gl.deletion_simulation(H, None, 20, 3, trials=4000, q=0.5, seed=0)
print(f"triangles {rep.clique_count}: mean survivors {rep.y_mean:.1f} +- {rep.y_se:.1f},"
      f" expected {rep.y_expected:.1f}")
