"""Polynomial-rank certificate for independent sets, over Z/pZ."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

import numpy as np

from ..numkit import is_prime
from .graphs import BitGraph, VectorGraph

__all__ = [
    "FpMatrix",
    "forbidden_residue_polynomial",
    "binomial_basis_coefficients",
    "reduced_polynomial_value",
    "fp_rank_check",
    "random_maximal_independent_set",
]


@dataclass
class FpMatrix:
    """Dense matrix over the prime field Z/pZ."""

    p: int
    entries: np.ndarray

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        self.entries = np.asarray(self.entries, dtype=np.int64) % self.p

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def rank(self) -> int:
        p = self.p
        M = self.entries.copy()
        rows, cols = M.shape
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.flatnonzero(M[r:, c])
            if nz.size == 0:
                continue
            piv = r + nz[0]
            if piv != r:
                M[[r, piv]] = M[[piv, r]]
            M[r] = M[r] * pow(int(M[r, c]), -1, p) % p
            others = np.flatnonzero(M[:, c])
            others = others[others != r]
            if others.size:
                M[others] = (M[others] - np.outer(M[others, c], M[r])) % p
            r += 1
        return r

    def is_nonsingular(self) -> bool:
        rows, cols = self.shape
        return rows == cols and self.rank() == rows


def forbidden_residue_polynomial(p: int, k: int, s: int) -> int:
    """``prod (i - s)`` over i in 0..p-1 with i != k mod p, reduced mod p.

    Nonzero exactly when ``s == k (mod p)``.
    """
    out = 1
    for i in range(p):
        if (i - k) % p:
            out = out * (i - s) % p
    return out


def binomial_basis_coefficients(p: int, k: int) -> list[int]:
    """``d_j`` with ``P(s) = sum_j d_j C(s, j)`` (forward differences at 0, mod p).

    Substituting ``C((x,y), j) = sum over j-subsets S of supp(x) of prod_{i in S} y_i``
    turns ``P((x, y))`` into a multilinear polynomial in y of degree < p.
    """
    vals = [forbidden_residue_polynomial(p, k, s) for s in range(p)]
    d = []
    for _ in range(p):
        d.append(vals[0] % p)
        vals = [(vals[i + 1] - vals[i]) for i in range(len(vals) - 1)]
    return d


def reduced_polynomial_value(coeffs: Sequence[int], p: int, x: np.ndarray, y: np.ndarray) -> int:
    """Evaluate the multilinear reduction attached to x at the (0,1)-point y."""
    t = int(np.dot(x, y))
    return sum(c * comb(t, j) for j, c in enumerate(coeffs)) % p


def fp_rank_check(G: VectorGraph, W: Sequence[int], p: int) -> bool:
    """Whether the evaluation matrix ``[P'_{x_i}(x_j)]`` over an independent W is nonsingular mod p.

    G must be a (0,1)-vector graph of weight k with forbidden product k - p.
    """
    if G.levels != 1:
        raise ValueError("the rank argument needs (0,1)-vectors")
    k = G.weight
    if set(G.forbidden_products) != {k - p}:
        raise ValueError(f"graph must forbid exactly the product k - p = {k - p}")
    W = list(W)
    if len(set(W)) != len(W):
        raise ValueError("W has repeated vertices")
    if not G.is_independent(W):
        raise ValueError("W is not an independent set")
    coeffs = binomial_basis_coefficients(p, k)
    X = G.vertices[W].astype(np.int64)
    gram = X @ X.T
    # the reduced polynomial only sees |supp x ∩ supp y|, so tabulate it once
    table = np.array([sum(c * comb(t, j) for j, c in enumerate(coeffs)) % p for t in range(k + 1)])
    return FpMatrix(p, table[gram]).is_nonsingular()


def random_maximal_independent_set(G: BitGraph, rng: np.random.Generator) -> list[int]:
    """Greedy maximal independent set along a uniformly random vertex order."""
    blocked = 0
    out = []
    for u in rng.permutation(len(G)).tolist():
        if not blocked >> u & 1:
            out.append(u)
            blocked |= G.adj[u] | (1 << u)
    return sorted(out)
