from ..utils.exceptions import HierarchyError
from typing import NamedTuple
from .Cluster import Cluster

class Merge(NamedTuple):
    """
        One agglomeration step: clusters 'left' and 'right' form 'parent' at
        average linkage 'linkage'.  'left' holds the smaller minimum member.
    """
    left: int
    right: int
    parent: int
    linkage: float

class Dendrogram:

    def __init__(self, leaf_count, merges):
        """
            Binary merge history over the leaves range(leaf_count).

            Leaves carry ids 0..p-1 and the k-th merge creates id p+k, as in
            scipy's linkage matrices.  'merges' is a sequence of Merge or
            (left, right, parent, linkage) tuples; exactly p-1 are required
            and every cluster must be merged at most once, so the final
            cluster is the full leaf set and the family is laminar.
        """
        p = int(leaf_count)
        if p < 1:
            raise HierarchyError("A dendrogram needs at least one leaf.")
        merges = tuple(Merge(int(m[0]), int(m[1]), int(m[2]), float(m[3]))
                       for m in merges)
        if len(merges) != p - 1:
            msg = (f"A dendrogram over {p:d} leaves needs exactly {p-1:d} "
                   f"merges, got {len(merges):d}.")
            raise HierarchyError(msg)

        table = {i: Cluster(i, (i,)) for i in range(p)}
        consumed = set()
        for k, m in enumerate(merges):
            if m.parent != p + k:
                msg = (f"Merge {k:d} must create cluster id {p+k:d}, got "
                       f"{m.parent:d}.")
                raise HierarchyError(msg)
            for child in (m.left, m.right):
                if child not in table:
                    msg = f"Merge {k:d} refers to unknown cluster {child:d}."
                    raise HierarchyError(msg)
                if child in consumed:
                    msg = f"Cluster {child:d} is merged more than once."
                    raise HierarchyError(msg)
            if m.left == m.right:
                msg = f"Merge {k:d} joins cluster {m.left:d} with itself."
                raise HierarchyError(msg)
            consumed.update((m.left, m.right))
            left, right = table[m.left], table[m.right]
            members = tuple(sorted(left.members + right.members))
            table[m.parent] = Cluster(m.parent, members)

        self.leaf_count = p
        self.merges = merges
        self._table = table

    @property
    def cluster_table(self):
        return dict(self._table)

    @property
    def root(self):
        return self._table[2*self.leaf_count - 2]

    def cluster(self, id):
        return self._table[id]

    def clusters(self):
        """
            All 2p-1 clusters, leaves first, then in merge order
        """
        return [self._table[i] for i in range(2*self.leaf_count - 1)]

    def member_sets(self):
        return frozenset(c.as_set() for c in self._table.values())

    def leaf_order(self):
        """
            Leaves in depth-first order, left child before right child.
            Every cluster occupies a contiguous run of this order.
        """
        p = self.leaf_count
        order = []
        stack = [2*p - 2]
        while stack:
            c = stack.pop()
            if c < p:
                order.append(c)
            else:
                m = self.merges[c - p]
                stack.append(m.right)
                stack.append(m.left)
        return order

    def __eq__(self, other):
        if not isinstance(other, Dendrogram):
            return NotImplemented
        return (self.leaf_count == other.leaf_count
                and self.merges == other.merges)

    def __repr__(self):
        return f"Dendrogram(leaf_count={self.leaf_count:d})"
