"""NumPy implementations of the hot kernels.

Accumulation order is pinned to match the compiled lane bit for bit: CSR
entries are consumed row-major in storage order (``np.add.at`` is unbuffered
and in-order), and delta-sigma terms are summed in edge-list order.
"""

import numpy as np

LANE = "python"


def csr_spmv(indptr, indices, data, x):
    """Sparse CSR times dense, accumulating in CSR storage order."""
    n_rows = indptr.shape[0] - 1
    out = np.zeros((n_rows, x.shape[1]), dtype=np.float64)
    if data.shape[0] == 0:
        return out
    row_ids = np.repeat(np.arange(n_rows), np.diff(indptr))
    np.add.at(out, row_ids, data[:, None] * x[indices])
    return out


def accumulate_delta_sigma(u, v, edges):
    """Sum u[a]*v[b] + u[b]*v[a] over edge rows, sequentially in edge order."""
    r = u.shape[1]
    out = np.zeros((1, r), dtype=np.float64)
    if edges.shape[0] == 0:
        return out[0]
    a = edges[:, 0]
    b = edges[:, 1]
    terms = u[a] * v[b] + u[b] * v[a]
    np.add.at(out, np.zeros(edges.shape[0], dtype=np.intp), terms)
    return out[0]


def block_top_candidates(block, row0, nbr_indptr, nbr_indices, limit):
    """Top positive-score candidates within one block of score-matrix rows.

    Valid cells are strictly upper-triangular (col > absolute row), not in
    the neighbor lists, and have score > 0. Returns (rows, cols, scores)
    containing at least the block's top-``limit`` valid cells; ties at the
    cutoff are all returned so the caller's exact merge can break them.
    """
    h, n = block.shape
    if limit <= 0:
        return (np.empty(0, np.int64), np.empty(0, np.int64), np.empty(0))
    rows_abs = row0 + np.arange(h)
    valid = block > 0.0
    valid &= np.arange(n)[None, :] > rows_abs[:, None]
    counts = np.diff(nbr_indptr)
    if nbr_indices.shape[0]:
        nbr_rows = np.repeat(np.arange(h), counts)
        valid[nbr_rows, nbr_indices] = False
    flat_valid = valid.ravel()
    n_valid = int(np.count_nonzero(flat_valid))
    if n_valid == 0:
        return (np.empty(0, np.int64), np.empty(0, np.int64), np.empty(0))
    flat = np.where(flat_valid, block.ravel(), -np.inf)
    if n_valid > limit:
        thresh = np.partition(flat, flat.size - limit)[flat.size - limit]
        keep = flat >= thresh
    else:
        keep = flat_valid
    idx = np.flatnonzero(keep)
    scores = flat[idx]
    rows = row0 + idx // n
    cols = idx % n
    return rows.astype(np.int64), cols.astype(np.int64), scores
