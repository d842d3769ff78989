"""Vector distance graphs with bit-set adjacency."""

from __future__ import annotations

import io
import math
from typing import Iterable, Iterator, Sequence

import numpy as np

from ..numkit import binomial

__all__ = [
    "GraphTooLargeError",
    "BitGraph",
    "VectorGraph",
    "build_graph",
    "enumerate_compositions",
    "write_edge_list",
    "read_edge_list",
]

MAX_DIMENSION = 30
MAX_VERTICES = 10**7


class GraphTooLargeError(RuntimeError):
    """A size guard was exceeded; no partial result is returned."""


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class BitGraph:
    """Simple undirected graph; ``adj[u]`` is an int whose bit ``v`` marks edge uv."""

    def __init__(self, adj: Sequence[int]):
        self.adj = list(adj)

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[tuple[int, int]]) -> "BitGraph":
        adj = [0] * num_vertices
        for u, v in edges:
            if u == v:
                raise ValueError("self loops are not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(adj)

    @property
    def num_vertices(self) -> int:
        return len(self.adj)

    def __len__(self) -> int:
        return len(self.adj)

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(_bits(self.adj[u]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(len(self.adj)) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def complement(self) -> "BitGraph":
        full = (1 << len(self.adj)) - 1
        return BitGraph([(full ^ a) & ~(1 << u) for u, a in enumerate(self.adj)])

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = 0
        for u in vertices:
            mask |= 1 << u
        return all(not (self.adj[u] & mask) for u in _bits(mask))

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        mask = 0
        for u in vertices:
            mask |= 1 << u
        return sum((self.adj[u] & mask).bit_count() for u in _bits(mask)) // 2


class VectorGraph(BitGraph):
    """Graph on all vectors in {0..r}^n with a fixed composition.

    ``{x, y}`` is an edge iff the inner product ``(x, y)`` lies in
    ``forbidden_products``.  All vertices share the squared norm
    ``S = sum j^2 c_j``, so ``|x - y|^2 = 2 S - 2 (x, y)``.
    """

    def __init__(self, n: int, composition: tuple[int, ...], forbidden_products: frozenset[int],
                 vertices: np.ndarray, adj: Sequence[int]):
        super().__init__(adj)
        self.n = n
        self.composition = composition
        self.forbidden_products = forbidden_products
        self.vertices = vertices

    @property
    def levels(self) -> int:
        """Largest coordinate value r."""
        return len(self.composition) - 1

    @property
    def weight(self) -> int:
        """Coordinate sum (the number of ones for (0,1)-vectors)."""
        return sum(j * c for j, c in enumerate(self.composition))

    @property
    def squared_norm(self) -> int:
        return sum(j * j * c for j, c in enumerate(self.composition))

    def squared_distance(self, product: int) -> int:
        return 2 * self.squared_norm - 2 * product

    def inner(self, u: int, v: int) -> int:
        return int(self.vertices[u] @ self.vertices[v])

    def index_of(self, x) -> int:
        hits = np.flatnonzero((self.vertices == np.asarray(x)).all(axis=1))
        if hits.size == 0:
            raise KeyError(tuple(x))
        return int(hits[0])


def _normalize_composition(n: int, composition) -> tuple[int, ...]:
    if isinstance(composition, (int, np.integer)):
        w = int(composition)
        if not 0 <= w <= n:
            raise ValueError(f"weight {w} outside [0, {n}]")
        return (n - w, w)
    comp = tuple(int(c) for c in composition)
    if len(comp) < 2 or min(comp) < 0 or sum(comp) != n:
        raise ValueError(f"composition {comp} must have >= 2 nonnegative counts summing to n={n}")
    return comp


def _multinomial(comp: Sequence[int]) -> int:
    total, out = 0, 1
    for c in comp:
        total += c
        out *= binomial(total, c)
    return out


def enumerate_compositions(comp: Sequence[int]) -> np.ndarray:
    """All vectors with ``comp[j]`` coordinates equal to j, in ascending lexicographic order."""
    n = sum(comp)
    out = np.empty((_multinomial(comp), n), dtype=np.int8)
    counts = list(comp)
    row = [0] * n
    idx = 0

    def rec(pos):
        nonlocal idx
        if pos == n:
            out[idx] = row
            idx += 1
            return
        for j in range(len(counts)):
            if counts[j]:
                counts[j] -= 1
                row[pos] = j
                rec(pos + 1)
                counts[j] += 1

    rec(0)
    return out


def _bitset_rows(mask: np.ndarray) -> list[int]:
    packed = np.packbits(mask, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def build_graph(n: int, composition, forbidden_products: Iterable[int],
                max_vertices: int = MAX_VERTICES) -> VectorGraph:
    """Enumerate the vector family and its exact adjacency.

    ``composition`` is either a weight (for (0,1)-vectors) or the counts of
    each coordinate value 0..r.
    """
    if n < 1 or n > MAX_DIMENSION:
        raise GraphTooLargeError(f"dimension n={n} outside [1, {MAX_DIMENSION}]")
    comp = _normalize_composition(n, composition)
    size = _multinomial(comp)
    if size > max_vertices:
        raise GraphTooLargeError(f"{size} vertices exceeds the guard {max_vertices}")
    products = frozenset(int(p) for p in forbidden_products)
    X = enumerate_compositions(comp)
    gram = X.astype(np.int32) @ X.T.astype(np.int32)
    mask = np.isin(gram, list(products)) if products else np.zeros_like(gram, dtype=bool)
    np.fill_diagonal(mask, False)
    return VectorGraph(n, comp, products, X, _bitset_rows(mask))


def write_edge_list(G: BitGraph, fh=None) -> str:
    """Header ``"N M"`` then one ``"u v"`` line per edge (0-indexed, u < v)."""
    edges = G.edges()
    lines = [f"{G.num_vertices} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    text = "\n".join(lines) + "\n"
    if fh is not None:
        fh.write(text)
    return text


def read_edge_list(source) -> BitGraph:
    fh = io.StringIO(source) if isinstance(source, str) else source
    header = fh.readline().split()
    if len(header) != 2:
        raise ValueError("edge list header must be 'N M'")
    num_vertices, num_edges = map(int, header)
    edges = []
    for line in fh:
        if line.strip():
            u, v = map(int, line.split())
            edges.append((u, v))
    if len(edges) != num_edges:
        raise ValueError(f"header declares {num_edges} edges, found {len(edges)}")
    return BitGraph.from_edges(num_vertices, edges)
