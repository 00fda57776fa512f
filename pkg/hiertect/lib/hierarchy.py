"""
    Average-linkage agglomerative clustering over a similarity matrix, and
    checks relating a dendrogram to a reference hierarchy.
"""

from ..utils.exceptions import ContractError, DimensionError
from ..core.SimilarityMatrix import SimilarityMatrix
from ..core.HierarchySet import HierarchySet
from ..core.Dendrogram import Dendrogram, Merge
from ..core.Cluster import Cluster
import numpy as np
import logging

log = logging.getLogger(__name__)

def _as_similarity(S):
    if isinstance(S, SimilarityMatrix):
        return S
    return SimilarityMatrix(S)

def _as_members(c):
    if isinstance(c, Cluster):
        return np.array(c.members, dtype = np.int64)
    return np.array(sorted(set(int(i) for i in c)), dtype = np.int64)

def average_linkage(S, a, b):
    """
        Mean similarity over all cross pairs (i in a, j in b) of two disjoint,
        non-empty clusters
    """
    S = _as_similarity(S)
    a, b = _as_members(a), _as_members(b)
    if a.size == 0 or b.size == 0:
        raise ContractError("Average linkage needs two non-empty clusters.")
    overlap = np.intersect1d(a, b)
    if overlap.size > 0:
        msg = (f"Average linkage needs disjoint clusters; both contain leaf "
               f"{int(overlap[0]):d}.")
        raise ContractError(msg)
    if max(a.max(), b.max()) >= S.size:
        raise DimensionError(S.size, int(max(a.max(), b.max())) + 1)
    return float(np.mean(S.entries[np.ix_(a, b)]))

def _select_pair(best, best_val, active):
    """
        Slot pair (i, j), i < j, with the largest linkage; ties go to the
        lexicographically smallest pair.  Slot numbers equal the smallest
        member of the cluster they hold.
    """
    rows = np.flatnonzero(active)
    vals = best_val[rows]
    top = vals.max()
    rows = rows[vals == top]
    partners = best[rows]
    lo = np.minimum(rows, partners)
    hi = np.maximum(rows, partners)
    k = np.lexsort((hi, lo))[0]
    return int(lo[k]), int(hi[k])

def agglomerate(S):
    """
        Bottom-up clustering: repeatedly merges the two clusters with the
        largest average linkage until one cluster remains.

        Linkages are maintained with the size-weighted Lance-Williams update,
        and every active cluster keeps its best partner, so a merge costs
        O(p) plus a rescan of the rows whose partner disappeared.  The
        diagonal of S is never used.  Ties are broken by the smallest
        minimum member, then the partner's smallest minimum member.
    """
    S = _as_similarity(S)
    p = S.size
    if p == 1:
        return Dendrogram(1, [])

    # Each cluster lives in the slot of its smallest member
    link = np.array(S.entries, dtype = np.float64)
    np.fill_diagonal(link, -np.inf)
    sizes = np.ones(p, dtype = np.int64)
    ids = np.arange(p, dtype = np.int64)
    active = np.ones(p, dtype = bool)
    best = np.argmax(link, axis = 1)
    best_val = link[np.arange(p), best]

    merges = []
    for k in range(p - 1):
        a, b = _select_pair(best, best_val, active)
        merges.append(Merge(int(ids[a]), int(ids[b]), p + k, float(link[a, b])))

        na, nb = sizes[a], sizes[b]
        row = (na*link[a] + nb*link[b])/(na + nb)
        link[a] = row
        link[:, a] = row
        link[b] = -np.inf
        link[:, b] = -np.inf
        link[a, a] = -np.inf
        sizes[a] = na + nb
        active[b] = False
        best_val[b] = -np.inf
        ids[a] = p + k

        if k == p - 2:
            break

        # Rows that pointed at a merged cluster need a full rescan
        stale = active & ((best == a) | (best == b))
        stale[a] = True
        rows = np.flatnonzero(stale)
        sub = link[rows]
        best[rows] = np.argmax(sub, axis = 1)
        best_val[rows] = sub[np.arange(rows.size), best[rows]]

        # Every other row only has to compare against the new cluster
        rows = np.flatnonzero(active & ~stale)
        vals = link[rows, a]
        better = (vals > best_val[rows]) | ((vals == best_val[rows])
                                            & (a < best[rows]))
        best[rows[better]] = a
        best_val[rows[better]] = vals[better]

    log.debug("Agglomerated %d leaves", p)
    return Dendrogram(p, merges)

def _separation_margins(S, H):
    """
        For every cluster c' of H other than singletons and the full leaf
        set: (c', min similarity inside c' - max similarity between c' and
        the rest).  Since H contains the full leaf set, the outermost nested
        pair dominates every other pair (c, c') with c' inside c.
    """
    S = _as_similarity(S)
    if S.size != H.leaf_count:
        raise DimensionError(H.leaf_count, S.size)
    R = S.entries
    margins = []
    for c in H.nontrivial():
        idx = np.array(sorted(c), dtype = np.int64)
        inside = R[np.ix_(idx, idx)]
        off = ~np.eye(idx.size, dtype = bool)
        rest = np.setdiff1d(np.arange(S.size), idx, assume_unique = True)
        margins.append((c, float(inside[off].min())
                        - float(R[np.ix_(idx, rest)].max())))
    return margins

def satisfies_separation(S, H):
    """
        True iff for every nested pair c' in c of H, every similarity between
        c' and c minus c' is strictly below every similarity inside c'
    """
    return all(m > 0 for _, m in _separation_margins(S, H))

def contains_hierarchy(D, H):
    """
        True iff every cluster of H is a cluster of the dendrogram D
    """
    if D.leaf_count != H.leaf_count:
        raise DimensionError(H.leaf_count, D.leaf_count)
    found = D.member_sets()
    return all(c in found for c in H.clusters)

def random_hierarchy(p, rng, max_children = 4):
    """
        Random laminar hierarchy over range(p) with singletons and the full
        set: leaves are shuffled and split recursively into 2..max_children
        contiguous parts
    """
    order = rng.permutation(p)
    sets = []
    stack = [order]
    while stack:
        block = stack.pop()
        sets.append(frozenset(int(i) for i in block))
        if block.size < 2:
            continue
        parts = int(rng.integers(2, min(max_children, block.size) + 1))
        cuts = np.sort(rng.choice(np.arange(1, block.size), parts - 1,
                                  replace = False))
        stack.extend(np.split(block, cuts))
    return HierarchySet(sets, p)

def consistent_similarity(H, rng, spread = 0.5):
    """
        Random similarity matrix satisfying the separation condition for H:
        r_ij = depth of the smallest cluster holding i and j, plus uniform
        noise in [0, spread) with spread < 1
    """
    p = H.leaf_count
    depth = np.zeros((p, p))
    # Depth of a cluster = number of clusters of H strictly containing it
    for c in H:
        idx = np.array(sorted(c), dtype = np.int64)
        depth[np.ix_(idx, idx)] += 1
    noise = rng.uniform(0, spread, (p, p))
    R = depth + np.triu(noise, 1) + np.triu(noise, 1).T
    return SimilarityMatrix(R)
