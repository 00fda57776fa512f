from ..utils.exceptions import HierarchyError
from .Cluster import Cluster

def _as_frozenset(c):
    if isinstance(c, Cluster):
        return c.as_set()
    return frozenset(int(i) for i in c)

def check_laminar(sets, leaf_count):
    """
        Raises HierarchyError unless every set lies inside range(leaf_count)
        and any two sets are nested or disjoint.

        Sets are visited from largest to smallest while every leaf remembers
        the smallest set seen so far that contains it; a laminar family sends
        all members of the next set to the same owner.
    """
    owner = [None]*leaf_count
    for s in sorted(sets, key = lambda s: (-len(s), min(s))):
        if len(s) == 0:
            raise HierarchyError("Hierarchies cannot contain empty clusters.")
        if min(s) < 0 or max(s) >= leaf_count:
            msg = (f"Cluster with members {sorted(s)[:8]} lies outside the "
                   f"leaf set of size {leaf_count:d}.")
            raise HierarchyError(msg)
        parents = {owner[i] for i in s}
        if len(parents) != 1:
            msg = (f"Cluster with members {sorted(s)[:8]} partially overlaps "
                   f"another cluster; the family is not laminar.")
            raise HierarchyError(msg)
        for i in s:
            owner[i] = s

class HierarchySet:

    def __init__(self, clusters, leaf_count):
        """
            A laminar family of leaf sets over range(leaf_count) that contains
            the full leaf set, e.g. the subtrees of a d-ary tree.  'clusters'
            may hold Cluster instances or plain iterables of leaf indices.
        """
        self.leaf_count = int(leaf_count)
        if self.leaf_count < 1:
            raise HierarchyError("A hierarchy needs at least one leaf.")
        sets = frozenset(_as_frozenset(c) for c in clusters)
        root = frozenset(range(self.leaf_count))
        if root not in sets:
            msg = "A hierarchy must contain the full leaf set."
            raise HierarchyError(msg)
        check_laminar(sets, self.leaf_count)
        self._sets = sets

    @classmethod
    def with_singletons(cls, clusters, leaf_count):
        """
            Builds the hierarchy from 'clusters' plus every singleton and the
            full leaf set
        """
        sets = set(_as_frozenset(c) for c in clusters)
        sets.update(frozenset([i]) for i in range(leaf_count))
        sets.add(frozenset(range(leaf_count)))
        return cls(sets, leaf_count)

    @property
    def clusters(self):
        return self._sets

    def nontrivial(self):
        """
            Clusters with at least two members, other than the full leaf set,
            sorted by (size, smallest member)
        """
        root = frozenset(range(self.leaf_count))
        sets = [s for s in self._sets if len(s) > 1 and s != root]
        return sorted(sets, key = lambda s: (len(s), min(s)))

    def __iter__(self):
        return iter(sorted(self._sets, key = lambda s: (len(s), min(s))))

    def __contains__(self, cluster):
        return _as_frozenset(cluster) in self._sets

    def __len__(self):
        return len(self._sets)

    def __repr__(self):
        return (f"HierarchySet(leaf_count={self.leaf_count:d}, "
                f"clusters={len(self):d})")
