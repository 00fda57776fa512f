from functools import cached_property
import numpy as np

class HaarBasis:

    def __init__(self, size, leaf_order, starts, splits, stops, w_left, w_right,
                 provenance):
        """
            Orthonormal unbalanced Haar basis on p leaves, stored per column.

            Column k < p-1 comes from merge k of a dendrogram: in the leaf
            order, the left cluster occupies positions [starts[k], splits[k])
            with weight w_left[k] < 0 and the right cluster occupies
            [splits[k], stops[k]) with weight w_right[k] > 0.  The last column
            is the constant vector 1/sqrt(p).  'provenance[k]' is the
            (left id, right id) pair of the merge behind column k.

            Instances are built by hiertect.lib.transform.build_basis.
        """
        self.size = int(size)
        arrays = {}
        for name, value, dtype in (("leaf_order", leaf_order, np.int64),
                                   ("starts", starts, np.int64),
                                   ("splits", splits, np.int64),
                                   ("stops", stops, np.int64),
                                   ("w_left", w_left, np.float64),
                                   ("w_right", w_right, np.float64)):
            a = np.array(value, dtype = dtype)
            a.flags.writeable = False
            arrays[name] = a
        self.leaf_order = arrays["leaf_order"]
        self.starts = arrays["starts"]
        self.splits = arrays["splits"]
        self.stops = arrays["stops"]
        self.w_left = arrays["w_left"]
        self.w_right = arrays["w_right"]
        self.provenance = tuple((int(l), int(r)) for l, r in provenance)

        if self.leaf_order.shape != (self.size,):
            msg = "Leaf order must list every leaf exactly once."
            raise ValueError(msg)
        if len(self.provenance) != self.size - 1:
            msg = (f"A basis of size {self.size:d} needs {self.size-1:d} "
                   f"difference columns, got {len(self.provenance):d}.")
            raise ValueError(msg)

    @cached_property
    def matrix(self):
        """
            Dense p x p matrix B whose columns are the basis vectors
        """
        p = self.size
        B = np.zeros((p, p))
        order = self.leaf_order
        for k in range(p - 1):
            B[order[self.starts[k]:self.splits[k]], k] = self.w_left[k]
            B[order[self.splits[k]:self.stops[k]], k] = self.w_right[k]
        B[:, p - 1] = 1/np.sqrt(p)
        B.flags.writeable = False
        return B

    def column(self, k):
        return np.array(self.matrix[:, k])

    def support(self, k):
        """
            Sorted leaf indices on which column k is non-zero
        """
        if k == self.size - 1:
            return np.arange(self.size)
        return np.sort(self.leaf_order[self.starts[k]:self.stops[k]])

    def __repr__(self):
        return f"HaarBasis(size={self.size:d})"
