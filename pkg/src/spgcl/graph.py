"""Sparse undirected graphs and the symmetric GCN propagation matrix.

Graphs store each undirected edge once, canonically as (i, j) with i < j,
sorted lexicographically. Matrix materializations are always symmetric and
deterministic (fixed CSR ordering, fixed accumulation order in spmv).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import CapExceeded, DimensionMismatch

DENSE_CAP = 12_000


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class SparseMatrix:
    """Immutable CSR matrix (float64)."""

    shape: tuple
    indptr: np.ndarray
    indices: np.ndarray
    data: np.ndarray

    @classmethod
    def from_coo(cls, n_rows, n_cols, rows, cols, vals) -> "SparseMatrix":
        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        vals = np.asarray(vals, dtype=np.float64)
        order = np.lexsort((cols, rows))
        rows, cols, vals = rows[order], cols[order], vals[order]
        indptr = np.zeros(n_rows + 1, dtype=np.int64)
        np.cumsum(np.bincount(rows, minlength=n_rows), out=indptr[1:])
        return cls((n_rows, n_cols), _freeze(indptr), _freeze(cols), _freeze(vals))

    @property
    def nnz(self) -> int:
        return int(self.data.shape[0])

    def toarray(self) -> np.ndarray:
        out = np.zeros(self.shape)
        row_ids = np.repeat(np.arange(self.shape[0]), np.diff(self.indptr))
        out[row_ids, self.indices] = self.data
        return out

    def transpose(self) -> "SparseMatrix":
        row_ids = np.repeat(np.arange(self.shape[0]), np.diff(self.indptr))
        return SparseMatrix.from_coo(
            self.shape[1], self.shape[0], self.indices, row_ids, self.data
        )


def spmv(m: SparseMatrix, x: np.ndarray) -> np.ndarray:
    """Sparse times dense with a fixed per-row accumulation order."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 2 or m.shape[1] != x.shape[0]:
        raise DimensionMismatch(f"cannot multiply {m.shape} by {x.shape}")
    return _kernels.csr_spmv(m.indptr, m.indices, m.data, x)


@dataclass(frozen=True)
class SparseGraph:
    """Undirected weighted graph, canonical edge storage.

    ``edges`` is (m, 2) int64 with edges[k, 0] < edges[k, 1], sorted
    lexicographically; ``weights`` is (m,) float64, all positive.
    """

    n_nodes: int
    edges: np.ndarray
    weights: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        edges = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        weights = self.weights
        if weights is None:
            weights = np.ones(edges.shape[0])
        weights = np.asarray(weights, dtype=np.float64)
        if weights.shape != (edges.shape[0],):
            raise ValueError("weights length must match edge count")
        if edges.size:
            if edges.min() < 0 or edges.max() >= self.n_nodes:
                raise ValueError("edge index out of range")
            if np.any(edges[:, 0] >= edges[:, 1]):
                raise ValueError("edges must be canonical pairs (i < j)")
            order = np.lexsort((edges[:, 1], edges[:, 0]))
            edges = edges[order]
            weights = weights[order]
            dup = (np.diff(edges[:, 0]) == 0) & (np.diff(edges[:, 1]) == 0)
            if np.any(dup):
                raise ValueError("duplicate edges")
        if np.any(weights <= 0):
            raise ValueError("weights must be positive")
        object.__setattr__(self, "edges", _freeze(edges))
        object.__setattr__(self, "weights", _freeze(weights))

    @classmethod
    def from_pairs(cls, n_nodes, pairs, weights=None) -> "SparseGraph":
        """Build from arbitrary (i, j) pairs, canonicalizing the order."""
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        if np.any(pairs[:, 0] == pairs[:, 1]):
            raise ValueError("self-loops are not allowed")
        lo = pairs.min(axis=1)
        hi = pairs.max(axis=1)
        return cls(n_nodes, np.column_stack([lo, hi]), weights)

    @classmethod
    def from_dense(cls, mat: np.ndarray) -> "SparseGraph":
        mat = np.asarray(mat, dtype=np.float64)
        if mat.shape[0] != mat.shape[1] or not np.array_equal(mat, mat.T):
            raise ValueError("dense adjacency must be square and symmetric")
        i, j = np.nonzero(np.triu(mat, k=1))
        return cls(mat.shape[0], np.column_stack([i, j]), mat[i, j])

    @property
    def n_edges(self) -> int:
        return int(self.edges.shape[0])

    def edge_set(self) -> set:
        return {(int(i), int(j)) for i, j in self.edges}

    def adjacency(self) -> SparseMatrix:
        """Weighted symmetric adjacency A (no self-loops)."""
        i, j, w = self.edges[:, 0], self.edges[:, 1], self.weights
        rows = np.concatenate([i, j])
        cols = np.concatenate([j, i])
        vals = np.concatenate([w, w])
        return SparseMatrix.from_coo(self.n_nodes, self.n_nodes, rows, cols, vals)

    def degrees(self) -> np.ndarray:
        """Weighted degree of each node (self-loops excluded by invariant)."""
        deg = np.zeros(self.n_nodes)
        np.add.at(deg, self.edges[:, 0], self.weights)
        np.add.at(deg, self.edges[:, 1], self.weights)
        return deg

    def neighbor_lists(self) -> tuple:
        """(indptr, indices) of the symmetric adjacency structure."""
        adj = self.adjacency()
        return adj.indptr, adj.indices


def to_dense(g: SparseGraph, cap: int = DENSE_CAP) -> np.ndarray:
    """Dense symmetric adjacency; refuses graphs above the node cap."""
    if g.n_nodes > cap:
        raise CapExceeded(f"{g.n_nodes} nodes exceeds dense cap {cap}")
    out = np.zeros((g.n_nodes, g.n_nodes))
    i, j = g.edges[:, 0], g.edges[:, 1]
    out[i, j] = g.weights
    out[j, i] = g.weights
    return out


def normalize_adjacency(g: SparseGraph) -> SparseMatrix:
    """Symmetric GCN propagation matrix over A + I with weighted degrees.

    Each off-diagonal value is computed once per unordered pair and written
    to both (i, j) and (j, i), so the result is exactly symmetric.
    """
    deg = g.degrees() + 1.0  # self-loop weight 1.0
    dinv = 1.0 / np.sqrt(deg)
    i, j, w = g.edges[:, 0], g.edges[:, 1], g.weights
    pair_vals = w * (dinv[i] * dinv[j])
    loop_vals = dinv * dinv
    rows = np.concatenate([i, j, np.arange(g.n_nodes)])
    cols = np.concatenate([j, i, np.arange(g.n_nodes)])
    vals = np.concatenate([pair_vals, pair_vals, loop_vals])
    return SparseMatrix.from_coo(g.n_nodes, g.n_nodes, rows, cols, vals)
