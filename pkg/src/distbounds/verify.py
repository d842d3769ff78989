"""Desk-scale verification suites over the graph constructions.

Each suite returns a :class:`SuiteReport` holding one :class:`Check` per
instance, with enough evidence to redo the check by hand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .graphlab import (
    build_graph,
    check_cycle_witness,
    clique_exceeding,
    deletion_simulation,
    even_cycle_witness,
    fp_rank_check,
    independence_number,
    independent_set_exceeding,
    intersection_step_violations,
    johnson_bound,
    odd_girth,
    random_maximal_independent_set,
    shortest_odd_cycle,
)
from .graphlab.cliques import MAX_SEARCH_VERTICES
from .graphlab.graphs import MAX_DIMENSION, GraphTooLargeError
from .numkit import binomial, is_prime

__all__ = ["Check", "SuiteReport", "SUITES", "run_suite"]


@dataclass
class Check:
    name: str
    passed: bool
    evidence: dict[str, Any]


@dataclass
class SuiteReport:
    suite: str
    params: dict[str, Any]
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "method": f"verify:{self.suite}",
            "params": self.params,
            "value": sum(c.passed for c in self.checks),
            "valid": self.passed,
            "evidence": [{"name": c.name, "passed": c.passed, **c.evidence} for c in self.checks],
        }


def _sweep_guard(n_max: int, cases) -> None:
    # fail before doing any work rather than after sweeping the small dimensions
    if n_max > MAX_DIMENSION:
        raise GraphTooLargeError(f"dimension n={n_max} outside [1, {MAX_DIMENSION}]")
    worst = max((binomial(c[0], c[1]) for c in cases), default=0)
    if worst > MAX_SEARCH_VERTICES:
        raise GraphTooLargeError(f"sweep up to n={n_max} reaches {worst} vertices, "
                                 f"above the search guard {MAX_SEARCH_VERTICES}")


def triangle_cases(n_max: int):
    """(n, k, p) with p prime <= min(k, n - k): exactly the cases with edges."""
    for n in range(2, n_max + 1):
        for k in range(1, n):
            for p in range(2, min(k, n - k) + 1):
                if is_prime(p):
                    yield n, k, p


def suite_triangles(n: int = 12, n_min: int = 2) -> SuiteReport:
    """Brute-force triangle-freeness against the n < 3p criterion, for all dimensions up to n."""
    rep = SuiteReport("triangles", {"n": n, "n_min": n_min})
    _sweep_guard(n, [c for c in triangle_cases(min(n, MAX_DIMENSION)) if c[0] >= n_min])
    for dim, k, p in triangle_cases(n):
        if dim < n_min:
            continue
        G = build_graph(dim, k, {k - p})
        tri = clique_exceeding(G, 2, vertex_transitive=True)
        predicted_free = dim < 3 * p
        rep.checks.append(Check(f"n={dim} k={k} p={p}", (tri is None) == predicted_free, {
            "vertices": len(G), "edges": G.num_edges, "triangle": tri,
            "predicted_triangle_free": predicted_free}))
    return rep


def suite_cycles(n: int = 20, b: int = 8, a: int = 3, k: int = 4, random_tuples: int = 0,
                 n_max: int = 40, seed: int = 0) -> SuiteReport:
    """The 2k-cycle witness for (n, b, a, k), plus optional random feasible tuples."""
    rep = SuiteReport("cycles", {"n": n, "b": b, "a": a, "k": k,
                                 "random_tuples": random_tuples, "n_max": n_max, "seed": seed})
    tuples = [(n, b, a, k)]
    rng = np.random.default_rng(seed)
    # feasible: 3 <= b <= n/2, 2 <= k <= b - 1, 1 <= a <= b - k
    while len(tuples) < 1 + random_tuples:
        nn = int(rng.integers(6, max(6, n_max) + 1))
        bb = int(rng.integers(3, nn // 2 + 1))
        kk = int(rng.integers(2, bb))
        aa = int(rng.integers(1, bb - kk + 1))
        tuples.append((nn, bb, aa, kk))
    for t in tuples:
        w = even_cycle_witness(*t)
        rep.checks.append(Check("n={} b={} a={} k={}".format(*t), check_cycle_witness(w),
                                {"length": w.length}))
    return rep


def suite_oddgirth(n: int = 11, b: int = 5, p: int = 5) -> SuiteReport:
    """Odd girth of G_{b, b-p}; the construction forbids odd cycles up to 2k+1 where p > nk/(2k+1)."""
    k = 0
    while k < n and p * (2 * (k + 1) + 1) > n * (k + 1):
        k += 1
    rep = SuiteReport("oddgirth", {"n": n, "b": b, "p": p, "k": k})
    G = build_graph(n, b, {b - p})
    g = odd_girth(G)
    rep.checks.append(Check(f"odd girth > {2 * k + 1}", g > 2 * k + 1,
                            {"odd_girth": g if g != float("inf") else "inf", "k": k}))
    cyc = shortest_odd_cycle(G)
    if cyc is not None:
        bad = intersection_step_violations(G.vertices[cyc], b - p)
        rep.checks.append(Check("intersection step inequality on a shortest odd cycle", not bad,
                                {"cycle": cyc, "violations": bad}))
    return rep


def alpha_cases(n_max: int):
    """(n, k, p) where the polynomial-method bound on alpha applies and is below |V|."""
    for n in range(2, n_max + 1):
        for k in range(1, n):
            for p in range(2, min(k, n - k) + 1):
                if not is_prime(p) or not k - 2 * p < max(0, 2 * k - n):
                    continue
                bound = sum(binomial(n, i) for i in range(p))
                if bound < binomial(n, k):
                    yield n, k, p, bound


def suite_fprank(n: int = 12, p: int = 5, weight: int | None = None, sets: int = 50,
                 alpha_n_max: int = 0, seed: int = 0) -> SuiteReport:
    """Nonsingularity of the evaluation matrix over random maximal independent sets.

    With ``alpha_n_max > 0`` also decides alpha <= sum_{i<p} C(n, i) for every
    applicable construction up to that dimension.
    """
    weight = n // 2 if weight is None else weight
    rep = SuiteReport("fprank", {"n": n, "p": p, "weight": weight, "sets": sets,
                                 "alpha_n_max": alpha_n_max, "seed": seed})
    _sweep_guard(alpha_n_max, list(alpha_cases(min(alpha_n_max, MAX_DIMENSION))))
    G = build_graph(n, weight, {weight - p})
    rng = np.random.default_rng(seed)
    for i in range(sets):
        W = random_maximal_independent_set(G, rng)
        rep.checks.append(Check(f"set {i}", fp_rank_check(G, W, p), {"size": len(W)}))
    for dim, k, q, bound in alpha_cases(alpha_n_max):
        H = build_graph(dim, k, {k - q})
        witness = independent_set_exceeding(H, bound, vertex_transitive=True)
        rep.checks.append(Check(f"alpha n={dim} k={k} p={q}", witness is None,
                                {"bound": bound, "vertices": len(H)}))
    return rep


def johnson_cases(n_max: int):
    for n in range(2, n_max + 1):
        for l in range(1, n):
            for d in range(1, l + 1):
                if l * l - l * n + d * n > 0:
                    yield n, l, d


def suite_johnson(n: int = 12) -> SuiteReport:
    """Exact clique number against the Johnson-type bound, code and exact-distance graphs."""
    rep = SuiteReport("johnson", {"n": n})
    _sweep_guard(n, list(johnson_cases(min(n, MAX_DIMENSION))))
    for dim, l, d in johnson_cases(n):
        J = johnson_bound(dim, l, d)
        for label, prods in (("distance>=", set(range(0, l - d + 1))), ("distance=", {l - d})):
            G = build_graph(dim, l, prods)
            w = clique_exceeding(G, J, vertex_transitive=True)
            rep.checks.append(Check(f"n={dim} l={l} delta={d} {label}{2 * d}", w is None,
                                    {"bound": J, "vertices": len(G), "larger_clique": w}))
    return rep


def suite_deletion(n: int = 8, weight: int = 4, product: int = 1, q: float = 0.5, l: int | None = None,
                   k_clique: int = 3, trials: int = 10_000, random_sets: int = 500,
                   seed: int = 0) -> SuiteReport:
    """Monte-Carlo means of X_l and Y_k against their exact values and bounds, plus r(W) >= l^2/(4 alpha)."""
    G = build_graph(n, weight, {product})
    alpha = independence_number(G)
    l = 2 * alpha if l is None else l
    rep = SuiteReport("deletion", {"n": n, "weight": weight, "product": product, "q": q, "l": l,
                                   "k_clique": k_clique, "trials": trials,
                                   "random_sets": random_sets, "seed": seed})
    r = deletion_simulation(G, None, l, k_clique, trials, q=q, seed=seed, alpha=alpha)
    rep.checks.append(Check("clique count mean matches exact expectation", r.y_within,
                            {"mean": r.y_mean, "se": r.y_se, "expected": r.y_expected,
                             "cliques_in_G": r.clique_count}))
    rep.checks.append(Check("independent-set mean within bounds", r.x_within,
                            {"mean": r.x_mean, "se": r.x_se, "turan_bound": r.x_bound_turan,
                             "quadratic_bound": r.x_bound_quadratic,
                             "quadratic_applicable": r.quadratic_applicable}))
    rng = np.random.default_rng([seed, 2])
    bad = []
    if alpha < len(G):
        for _ in range(random_sets):
            size = int(rng.integers(alpha + 1, len(G) + 1))
            W = rng.choice(len(G), size=size, replace=False).tolist()
            if G.induced_edge_count(W) < size * size / (4 * alpha):
                bad.append(size)
    rep.checks.append(Check("random sets larger than alpha have r(W) >= l^2/(4 alpha)", not bad,
                            {"alpha": alpha, "sets": random_sets, "failures": bad}))
    return rep


SUITES = {
    "triangles": suite_triangles,
    "cycles": suite_cycles,
    "oddgirth": suite_oddgirth,
    "fprank": suite_fprank,
    "johnson": suite_johnson,
    "deletion": suite_deletion,
}


def run_suite(name: str, **params) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**params)
