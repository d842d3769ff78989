"""Exact clique / independence search and clique-size bounds."""

from __future__ import annotations

import math
from fractions import Fraction

from .graphs import BitGraph, GraphTooLargeError, _bits

__all__ = [
    "BoundInapplicableError",
    "max_clique",
    "clique_number",
    "clique_exceeding",
    "independent_set_exceeding",
    "max_independent_set",
    "independence_number",
    "chi_lower_bound",
    "johnson_bound",
    "enumerate_cliques",
    "count_cliques",
    "turan_min_edges",
]

MAX_SEARCH_VERTICES = 10**4


class BoundInapplicableError(ValueError):
    """The Johnson-type bound needs a positive denominator."""


def _guard(G: BitGraph, limit: int):
    if len(G) > limit:
        raise GraphTooLargeError(f"{len(G)} vertices exceeds the exact-search guard {limit}")


def _relabel(G: BitGraph) -> tuple[list[int], list[int]]:
    # non-increasing degree order, so low bits are high-degree vertices
    N = len(G)
    order = sorted(range(N), key=lambda u: (-G.degree(u), u))
    pos = [0] * N
    for i, u in enumerate(order):
        pos[u] = i
    adj = [0] * N
    for u in range(N):
        m = 0
        for v in _bits(G.adj[u]):
            m |= 1 << pos[v]
        adj[pos[u]] = m
    return order, adj


def _search(adj: list[int], lower: int, stop_at: int | None) -> list[int]:
    """Largest clique with more than ``lower`` vertices, or [] if none exists."""
    best: list[int] = []
    best_size = lower
    current: list[int] = []
    target = stop_at if stop_at is not None else len(adj) + 1
    done = False

    def colour_sort(P: int) -> list[tuple[int, int]]:
        out = []
        colour = 0
        Q = P
        while Q:
            colour += 1
            avail = Q
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~adj[v] & ~low
                Q &= ~low
                out.append((v, colour))
        return out

    def expand(P: int):
        nonlocal best, best_size, done
        for v, colour in reversed(colour_sort(P)):
            if done or len(current) + colour <= best_size:
                return
            current.append(v)
            newP = P & adj[v]
            if newP:
                expand(newP)
            elif len(current) > best_size:
                best = list(current)
                best_size = len(best)
                if best_size >= target:
                    done = True
            current.pop()
            P &= ~(1 << v)

    if adj:
        expand((1 << len(adj)) - 1)
    return best


def max_clique(G: BitGraph, stop_at: int | None = None,
               max_vertices: int = MAX_SEARCH_VERTICES) -> list[int]:
    """A maximum clique, by branch and bound with greedy-colouring bounds.

    With ``stop_at`` the search returns as soon as a clique of that size is
    found (enough to decide ``omega >= stop_at``).
    """
    _guard(G, max_vertices)
    if len(G) == 0:
        return []
    order, adj = _relabel(G)
    return sorted(order[i] for i in _search(adj, 0, stop_at))


def clique_exceeding(G: BitGraph, threshold: int, vertex_transitive: bool = False,
                     max_vertices: int = MAX_SEARCH_VERTICES) -> list[int] | None:
    """A clique with more than ``threshold`` vertices, or None if omega <= threshold.

    For a vertex-transitive G some maximum clique contains vertex 0, so
    only its neighbourhood needs searching.  Every single-composition
    VectorGraph qualifies: coordinate permutations act transitively on the
    vertices and preserve inner products.
    """
    _guard(G, max_vertices)
    if len(G) == 0:
        return None
    if threshold < 1:
        return [0]
    if not vertex_transitive:
        order, adj = _relabel(G)
        found = _search(adj, threshold, threshold + 1)
        return sorted(order[i] for i in found) if found else None
    nbrs = G.neighbors(0)
    pos = {u: i for i, u in enumerate(nbrs)}
    sub = BitGraph([sum(1 << pos[v] for v in _bits(G.adj[u]) if v in pos) for u in nbrs])
    order, adj = _relabel(sub)
    found = _search(adj, threshold - 1, threshold)
    return sorted([0] + [nbrs[order[i]] for i in found]) if found else None


def independent_set_exceeding(G: BitGraph, threshold: int, vertex_transitive: bool = False,
                              max_vertices: int = MAX_SEARCH_VERTICES) -> list[int] | None:
    """An independent set larger than ``threshold``, or None if alpha <= threshold."""
    _guard(G, max_vertices)
    return clique_exceeding(G.complement(), threshold, vertex_transitive, max_vertices)


def clique_number(G: BitGraph, stop_at: int | None = None,
                  max_vertices: int = MAX_SEARCH_VERTICES) -> int:
    if len(G) == 0:
        return 0
    return len(max_clique(G, stop_at, max_vertices))


def max_independent_set(G: BitGraph, max_vertices: int = MAX_SEARCH_VERTICES) -> list[int]:
    _guard(G, max_vertices)
    return max_clique(G.complement(), max_vertices=max_vertices)


def independence_number(G: BitGraph, max_vertices: int = MAX_SEARCH_VERTICES) -> int:
    if len(G) == 0:
        return 0
    return len(max_independent_set(G, max_vertices))


def chi_lower_bound(G: BitGraph, alpha: int | None = None) -> Fraction:
    """Exact rational ``|V| / alpha(G)``."""
    if alpha is None:
        alpha = independence_number(G)
    return Fraction(len(G), alpha)


def johnson_bound(n: int, l: int, delta: int) -> int:
    """``ceil(delta n / (l^2 - l n + delta n))`` for weight-l codes at Hamming distance >= 2 delta."""
    den = l * l - l * n + delta * n
    if den <= 0:
        raise BoundInapplicableError(f"denominator l^2 - l n + delta n = {den} is not positive")
    return -(-delta * n // den)


def enumerate_cliques(G: BitGraph, size: int) -> list[tuple[int, ...]]:
    """All cliques with exactly ``size`` vertices (as increasing tuples)."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], cand: int):
        if len(prefix) == size:
            out.append(tuple(prefix))
            return
        for v in _bits(cand):
            prefix.append(v)
            rec(prefix, cand & G.adj[v] & ~((1 << (v + 1)) - 1))
            prefix.pop()

    if size == 0:
        return [()]
    rec([], (1 << len(G)) - 1)
    return out


def count_cliques(G: BitGraph, size: int) -> int:
    return len(enumerate_cliques(G, size))


def turan_min_edges(l: int, alpha: int) -> int:
    """Fewest edges in an l-vertex graph with independence number <= alpha.

    Attained by ``alpha`` disjoint cliques of near-equal size (Turán).
    """
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    q, s = divmod(l, alpha)
    return s * math.comb(q + 1, 2) + (alpha - s) * math.comb(q, 2)
