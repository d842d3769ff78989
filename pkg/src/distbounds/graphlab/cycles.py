"""Even-cycle witnesses in G_{b,a} and odd-girth computation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cliques import _guard, MAX_SEARCH_VERTICES
from .graphs import BitGraph, _bits

__all__ = [
    "CycleWitness",
    "even_cycle_witness",
    "check_cycle_witness",
    "odd_girth",
    "shortest_odd_cycle",
    "intersection_step_violations",
]


@dataclass(frozen=True)
class CycleWitness:
    """Vectors x_1..x_{2k} of weight b with (x_i, x_{i+1}) = a cyclically."""

    vectors: np.ndarray
    n: int
    b: int
    a: int
    k: int

    @property
    def length(self) -> int:
        return len(self.vectors)


def even_cycle_witness(n: int, b: int, a: int, k: int) -> CycleWitness:
    """Build a 2k-cycle in the graph of weight-b (0,1)-vectors at inner product a.

    Coordinates split into blocks: a-1 positions shared by every vector,
    two blocks of size b-a-k+1 used by odd and even vectors respectively,
    2k positions carrying a cyclic window of k ones, and zeros elsewhere.
    Consecutive windows are shifted by k-1, so they overlap in one position.
    """
    if not (1 <= a and k >= 2 and 2 * b <= n and b - k >= a):
        raise ValueError(f"need b <= n/2, a >= 1, k >= 2, b - k >= a; got n={n} b={b} a={a} k={k}")
    shared = a - 1
    half = b - a - k + 1
    odd0 = shared
    even0 = shared + half
    win0 = shared + 2 * half
    X = np.zeros((2 * k, n), dtype=np.int8)
    for i in range(2 * k):  # row i holds x_{i+1}
        X[i, :shared] = 1
        start = odd0 if i % 2 == 0 else even0
        X[i, start:start + half] = 1
        s = (i * (k - 1)) % (2 * k)
        for t in range(k):
            X[i, win0 + (s + t) % (2 * k)] = 1
    return CycleWitness(X, n, b, a, k)


def check_cycle_witness(w: CycleWitness) -> bool:
    """Independent check: distinct vectors, all weights b, cyclic products a."""
    X = np.asarray(w.vectors, dtype=np.int64)
    if X.shape != (2 * w.k, w.n) or not np.isin(X, (0, 1)).all():
        return False
    if not (X.sum(axis=1) == w.b).all():
        return False
    if len({row.tobytes() for row in X}) != len(X):
        return False
    nxt = np.roll(X, -1, axis=0)
    return bool(((X * nxt).sum(axis=1) == w.a).all())


def _odd_search(G: BitGraph):
    # per root: BFS by levels; an edge inside one level closes an odd walk
    # and the two tree paths up to their meeting point give a simple odd cycle
    N = len(G)
    adj = G.adj
    best_len = math.inf
    best_cycle: list[int] | None = None
    for root in range(N):
        parent = {root: -1}
        frontier = 1 << root
        seen = frontier
        d = 0
        while frontier and 2 * d + 1 < best_len:
            for u in _bits(frontier):
                inner = adj[u] & frontier & ~((1 << (u + 1)) - 1)
                if inner:
                    v = (inner & -inner).bit_length() - 1
                    pu, pv = [u], [v]
                    while pu[-1] != pv[-1]:
                        pu.append(parent[pu[-1]])
                        pv.append(parent[pv[-1]])
                    cyc = pu + pv[-2::-1]
                    if len(cyc) < best_len:
                        best_len = len(cyc)
                        best_cycle = cyc
            nxt = 0
            for u in _bits(frontier):
                new = adj[u] & ~seen & ~nxt
                for v in _bits(new):
                    parent[v] = u
                nxt |= new
            seen |= nxt
            frontier = nxt
            d += 1
        if best_len == 3:
            break
    return best_len, best_cycle


def odd_girth(G: BitGraph, max_vertices: int = MAX_SEARCH_VERTICES) -> float:
    """Length of the shortest odd cycle; ``math.inf`` for bipartite graphs."""
    _guard(G, max_vertices)
    return _odd_search(G)[0]


def shortest_odd_cycle(G: BitGraph, max_vertices: int = MAX_SEARCH_VERTICES) -> list[int] | None:
    """Vertices of a shortest odd cycle in traversal order, or None."""
    _guard(G, max_vertices)
    return _odd_search(G)[1]


def intersection_step_violations(vectors: Sequence[Sequence[int]], a: int) -> list[tuple[int, int]]:
    """Check ``|A_s ∩ A_{s+i+2}| <= |A_s ∩ A_{s+i}| + n + 2a - 2b`` along a closed walk.

    ``vectors`` are weight-b (0,1)-vectors with consecutive products a.
    Every rotation start s and step i is tested; failing (s, i) pairs are
    returned (empty means the inequality held everywhere).
    """
    X = np.asarray(vectors, dtype=np.int64)
    L, n = X.shape
    b = int(X[0].sum())
    slack = n + 2 * a - 2 * b
    gram = X @ X.T
    bad = []
    for s in range(L):
        for i in range(L):
            if gram[s, (s + i + 2) % L] > gram[s, (s + i) % L] + slack:
                bad.append((s, i))
    return bad
