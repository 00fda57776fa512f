from ..utils.validation import validate_count
import numpy as np

class TreeModel:

    def __init__(self, d, L):
        """
            Uniform d-ary tree of depth L with p = d**L leaves.

            Vertices are numbered level by level: level l (0 = root, L =
            leaves) holds d**l vertices starting at offset(l), and the k-th
            vertex of level l has parent k//d on level l-1.  An edge belongs
            to the level of its child, so level l has d**l edges.
        """
        self.d = validate_count(d, "d", minimum = 2)
        self.L = validate_count(L, "L", minimum = 1)
        self.p = self.d**self.L
        self.vertex_count = (self.d**(self.L + 1) - 1)//(self.d - 1)

    def level_size(self, level):
        return self.d**level

    def edge_count(self, level):
        """
            |E_l|, the number of edges into level-l vertices
        """
        if not 1 <= level <= self.L:
            msg = f"Edge levels run from 1 to {self.L:d}, got {level:d}."
            raise ValueError(msg)
        return self.d**level

    def offset(self, level):
        return (self.d**level - 1)//(self.d - 1)

    def parent(self, vertex):
        """
            Index of the parent of a non-root vertex
        """
        if vertex <= 0 or vertex >= self.vertex_count:
            msg = f"Vertex {vertex:d} has no parent in this tree."
            raise ValueError(msg)
        level = self.level_of(vertex)
        k = vertex - self.offset(level)
        return self.offset(level - 1) + k//self.d

    def level_of(self, vertex):
        level = 0
        while self.offset(level + 1) <= vertex:
            level += 1
        return level

    def leaves_under(self, level, k):
        """
            Leaf indices below the k-th vertex of a level, as a range
        """
        width = self.d**(self.L - level)
        return range(k*width, (k + 1)*width)

    def vertex_levels(self):
        return np.concatenate([np.full(self.d**l, l)
                               for l in range(self.L + 1)])

    def __eq__(self, other):
        if not isinstance(other, TreeModel):
            return NotImplemented
        return (self.d, self.L) == (other.d, other.L)

    def __hash__(self):
        return hash((self.d, self.L))

    def __repr__(self):
        return f"TreeModel(d={self.d:d}, L={self.L:d}, p={self.p:d})"
