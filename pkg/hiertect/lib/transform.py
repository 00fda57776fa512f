"""
    Unbalanced Haar basis of a dendrogram: construction, analysis and
    synthesis, and transform-domain sparsity.
"""

from ..config.default_params import default_params
from ..utils.validation import validate_vectors, validate_nonnegative
from ..core.HaarBasis import HaarBasis
import numpy as np
import logging

log = logging.getLogger(__name__)

def build_basis(D):
    """
        One difference column per merge of D, in merge order, then the
        constant column 1/sqrt(p).

        For a merge of c1 (left) and c2 (right) the column is

            sqrt(|c1||c2|/(|c1|+|c2|)) * (1_c2/|c2| - 1_c1/|c1|)

        so it is negative on c1, positive on c2 and sums to zero.
    """
    p = D.leaf_count
    order = np.array(D.leaf_order(), dtype = np.int64)
    position = np.empty(p, dtype = np.int64)
    position[order] = np.arange(p)

    # [start, stop) of every cluster id in the leaf order
    start = np.zeros(2*p - 1, dtype = np.int64)
    stop = np.zeros(2*p - 1, dtype = np.int64)
    start[:p] = position
    stop[:p] = position + 1

    starts, splits, stops = [], [], []
    for m in D.merges:
        if stop[m.left] != start[m.right]:
            # Leaf order is depth-first with left children first
            raise RuntimeError("Dendrogram leaf order is not contiguous.")
        start[m.parent] = start[m.left]
        stop[m.parent] = stop[m.right]
        starts.append(start[m.left])
        splits.append(stop[m.left])
        stops.append(stop[m.right])

    starts = np.array(starts, dtype = np.int64)
    splits = np.array(splits, dtype = np.int64)
    stops = np.array(stops, dtype = np.int64)
    n1 = (splits - starts).astype(np.float64)
    n2 = (stops - splits).astype(np.float64)
    w_left = -np.sqrt(n2/(n1*(n1 + n2)))
    w_right = np.sqrt(n1/(n2*(n1 + n2)))

    log.debug("Built unbalanced Haar basis on %d leaves", p)
    return HaarBasis(p, order, starts, splits, stops, w_left, w_right,
                     [(m.left, m.right) for m in D.merges])

def analyze(B, v):
    """
        Coefficients B^T v of a vector, or of every row of a 2-D stack
    """
    v = validate_vectors(v, B.size)
    return v @ B.matrix

def synthesize(B, c):
    """
        Inverse of analyze: B c for a coefficient vector or each row of a
        2-D stack
    """
    c = validate_vectors(c, B.size)
    return c @ B.matrix.T

def fast_analyze(B, v):
    """
        Same result as analyze in O(p) per vector, using prefix sums over the
        leaf order in which every cluster is a contiguous run
    """
    v = validate_vectors(v, B.size)
    p = B.size
    w = v[..., B.leaf_order]
    zeros = np.zeros(w.shape[:-1] + (1,))
    cs = np.concatenate([zeros, np.cumsum(w, axis = -1)], axis = -1)
    out = np.empty_like(w)
    left = cs[..., B.splits] - cs[..., B.starts]
    right = cs[..., B.stops] - cs[..., B.splits]
    out[..., :p-1] = B.w_left*left + B.w_right*right
    out[..., p-1] = cs[..., p]/np.sqrt(p)
    return out

def fast_synthesize(B, c):
    """
        Same result as synthesize in O(p) per vector, by accumulating every
        column's two weighted runs in a difference array
    """
    c = validate_vectors(c, B.size)
    p = B.size
    single = c.ndim == 1
    cT = np.atleast_2d(c).T
    diff = np.zeros((p + 1, cT.shape[1]))
    left = cT[:p-1]*B.w_left[:, None]
    right = cT[:p-1]*B.w_right[:, None]
    np.add.at(diff, B.starts, left)
    np.add.at(diff, B.splits, right - left)
    np.add.at(diff, B.stops, -right)
    ordered = np.cumsum(diff[:p], axis = 0) + cT[p-1]/np.sqrt(p)
    out = np.empty_like(ordered)
    out[B.leaf_order] = ordered
    out = out.T
    return out[0] if single else out

def coefficient_tolerance(c, rtol = None):
    """
        Default zero threshold for coefficient counting:
        rtol * sqrt(p) * max|c|
    """
    if rtol is None:
        rtol = default_params["sparsity_rtol"]
    c = np.asarray(c, dtype = np.float64)
    p = c.shape[-1]
    return rtol*np.sqrt(p)*np.max(np.abs(c), axis = -1, initial = 0.0)

def signal_tolerance(v, rtol = None):
    """
        Zero threshold scaled by the signal instead of its coefficients:
        rtol * sqrt(p) * max|v|
    """
    return coefficient_tolerance(v, rtol)

def sparsity(c, tol = None):
    """
        Number of coefficients with magnitude above 'tol'; per row for a 2-D
        stack.  Without 'tol' the coefficient_tolerance default is used.
    """
    c = validate_vectors(c)
    if tol is None:
        tol = coefficient_tolerance(c)
        if c.ndim == 2:
            tol = tol[:, None]
    else:
        tol = validate_nonnegative(tol, "tol")
    counts = np.count_nonzero(np.abs(c) > tol, axis = -1)
    return int(counts) if c.ndim == 1 else counts

def orthonormality_error(B):
    """
        max |B^T B - I|
    """
    M = B.matrix
    return float(np.max(np.abs(M.T @ M - np.eye(B.size))))
