"""Monte-Carlo check of the random-subgraph expectations used by the deletion method.

Each edge of G is kept independently with probability q.  X_l counts the
independent l-sets of the random subgraph and Y_k its k-cliques; their
expectations have exact forms, sum over W of (1-q)^{r(W)} and
(#k-cliques of G) * q^{C(k,2)}, and the simple upper bounds
``C(N,l) (1-q)^{A}`` and ``C(N,k) q^{C(k,2)}``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from itertools import combinations

import numpy as np
from scipy import sparse

from ..numkit import binomial
from .cliques import enumerate_cliques, independence_number, turan_min_edges
from .graphs import BitGraph, GraphTooLargeError, VectorGraph

__all__ = ["DeletionReport", "deletion_simulation", "internal_edge_count"]

MAX_SIM_VERTICES = 2000
EXACT_SUBSET_LIMIT = 20000
SAMPLED_SUBSETS = 4000
CHUNK = 1000


@dataclass(frozen=True)
class DeletionReport:
    N: int
    q: float
    trials: int
    alpha: int
    k_clique: int
    clique_count: int
    y_mean: float
    y_se: float
    y_expected: float
    y_bound: float
    l: int
    x_exact_enumeration: bool
    x_mean: float
    x_se: float
    x_expected: float
    x_bound_quadratic: float
    quadratic_applicable: bool
    x_bound_turan: float
    y_within: bool
    x_within: bool
    x_agrees: bool

    @property
    def ok(self) -> bool:
        """Means sit within 5 standard errors of their bounds; Y_k also matches its exact mean."""
        return self.y_within and self.x_within

    def as_dict(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d


def internal_edge_count(G: BitGraph, W) -> int:
    """r(W): the number of edges of G with both ends in W."""
    return G.induced_edge_count(W)


def _edge_index(G: BitGraph) -> np.ndarray:
    """N x N array holding each edge's index (u < v order), -1 for non-edges."""
    N = len(G)
    idx = np.full((N, N), -1, dtype=np.int64)
    for i, (u, v) in enumerate(G.edges()):
        idx[u, v] = idx[v, u] = i
    return idx


def _subset_edges(W, index: np.ndarray) -> list[int]:
    W = np.asarray(W)
    block = index[np.ix_(W, W)]
    upper = block[np.triu_indices(len(W), 1)]
    return upper[upper >= 0].tolist()


def _incidence(groups: list[list[int]], E: int) -> sparse.csc_matrix:
    # E x len(groups) 0/1 matrix: column j marks the edges of group j
    rows = [e for g in groups for e in g]
    cols = [j for j, g in enumerate(groups) for _ in g]
    data = np.ones(len(rows), dtype=np.float64)
    return sparse.csc_matrix((data, (rows, cols)), shape=(E, len(groups)))


def _kept_counts(masks: np.ndarray, inc: sparse.csc_matrix) -> np.ndarray:
    """Per trial and group, how many of the group's edges survived."""
    return np.asarray(inc.T @ masks.T.astype(np.float64)).T


def _mean_se(x: np.ndarray) -> tuple[float, float]:
    m = float(x.mean())
    se = float(x.std(ddof=1) / math.sqrt(len(x))) if len(x) > 1 else 0.0
    return m, se


def deletion_simulation(G: VectorGraph | BitGraph, gamma: float, l: int, k_clique: int,
                        trials: int, q: float | None = None, seed: int = 0,
                        alpha: int | None = None) -> DeletionReport:
    """Sample random edge-subgraphs and compare X_l, Y_k with their expectations.

    ``q`` defaults to ``gamma ** n``.  When C(N, l) exceeds
    ``EXACT_SUBSET_LIMIT`` the l-sets are replaced by a fixed uniform
    sample and X_l is scaled up by C(N, l) / sample size.
    """
    N = len(G)
    if N > MAX_SIM_VERTICES:
        raise GraphTooLargeError(f"{N} vertices exceeds the simulation guard {MAX_SIM_VERTICES}")
    if q is None:
        n = getattr(G, "n", None)
        if n is None:
            raise ValueError("q is required for graphs without a dimension")
        q = float(gamma) ** n
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"q={q} outside [0, 1]")
    if trials < 1 or not 1 <= l <= N or k_clique < 2:
        raise ValueError("need trials >= 1, 1 <= l <= N, k_clique >= 2")
    if alpha is None:
        alpha = independence_number(G)

    index = _edge_index(G)
    E = G.num_edges
    cliques = [_subset_edges(c, index) for c in enumerate_cliques(G, k_clique)]

    total_l = binomial(N, l)
    exact = total_l <= EXACT_SUBSET_LIMIT
    sub_rng = np.random.default_rng([seed, 1])
    if exact:
        subsets = list(combinations(range(N), l))
    else:
        subsets = [tuple(sorted(sub_rng.choice(N, size=l, replace=False).tolist()))
                   for _ in range(SAMPLED_SUBSETS)]
    sub_groups = [_subset_edges(W, index) for W in subsets]
    scale = total_l / len(subsets)

    edges_per_clique = k_clique * (k_clique - 1) // 2
    clique_inc = _incidence(cliques, E)
    sub_inc = _incidence(sub_groups, E)
    ys, xs = [], []
    for start in range(0, trials, CHUNK):
        size = min(CHUNK, trials - start)
        rng = np.random.default_rng([seed, 0, start])
        masks = rng.random((size, E)) < q
        if cliques:
            ys.append((_kept_counts(masks, clique_inc) == edges_per_clique).sum(axis=1))
        else:
            ys.append(np.zeros(size))
        xs.append((_kept_counts(masks, sub_inc) == 0).sum(axis=1) * scale)
    y = np.concatenate(ys).astype(float)
    x = np.concatenate(xs).astype(float)
    y_mean, y_se = _mean_se(y)
    x_mean, x_se = _mean_se(x)

    y_expected = len(cliques) * q ** edges_per_clique
    y_bound = binomial(N, k_clique) * q ** edges_per_clique
    quad = l * l / (4.0 * alpha)
    x_bound_quadratic = total_l * (1.0 - q) ** quad
    x_bound_turan = total_l * (1.0 - q) ** turan_min_edges(l, alpha)

    # rare events leave the sample SE at 0, so floor it by the SE the same
    # per-set probabilities would give if the l-sets were independent
    probs = np.array([(1.0 - q) ** len(g) for g in sub_groups])
    x_expected = scale * float(probs.sum())
    x_se_floor = scale * math.sqrt(float((probs * (1 - probs)).sum()) / trials)
    tol_y = 5.0 * y_se + 1e-9 * max(1.0, y_expected)
    tol_x = 5.0 * max(x_se, x_se_floor) + 1e-9 * max(1.0, x_expected)
    return DeletionReport(
        N=N, q=q, trials=trials, alpha=alpha, k_clique=k_clique,
        clique_count=len(cliques), y_mean=y_mean, y_se=y_se,
        y_expected=y_expected, y_bound=y_bound, l=l,
        x_exact_enumeration=exact, x_mean=x_mean, x_se=x_se,
        x_expected=x_expected, x_bound_quadratic=x_bound_quadratic,
        quadratic_applicable=l >= 2 * alpha, x_bound_turan=x_bound_turan,
        y_within=abs(y_mean - y_expected) <= tol_y and y_mean <= y_bound + tol_y,
        x_within=x_mean <= x_bound_turan + tol_x
        and (l < 2 * alpha or x_mean <= x_bound_quadratic + tol_x),
        x_agrees=abs(x_mean - x_expected) <= tol_x,
    )
