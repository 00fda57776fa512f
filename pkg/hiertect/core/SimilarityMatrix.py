from ..utils.checking import check_numerical_return_array
from ..utils.exceptions import SimilarityError
import numpy as np

class SimilarityMatrix:

    def __init__(self, entries, rtol = 1e-12):
        """
            Symmetric p x p matrix of pairwise node similarities r_ij.

            Entries may be negative (empirical covariances can be).  The
            diagonal is stored but never consulted by the linkage.  Matrices
            that are symmetric up to 'rtol' relative rounding are symmetrized;
            anything further off raises SimilarityError, as do NaN or infinite
            entries and non-square input.
        """
        try:
            a = check_numerical_return_array(entries)
        except ValueError as e:
            raise SimilarityError(str(e))

        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            msg = (f"Similarity matrix must be square and non-empty, got "
                   f"shape {a.shape}.")
            raise SimilarityError(msg)
        if np.any(np.isnan(a)):
            i, j = np.argwhere(np.isnan(a))[0]
            msg = f"Similarity matrix has a NaN entry at ({i:d},{j:d})."
            raise SimilarityError(msg)
        if not np.all(np.isfinite(a)):
            i, j = np.argwhere(~np.isfinite(a))[0]
            msg = f"Similarity matrix has an infinite entry at ({i:d},{j:d})."
            raise SimilarityError(msg)

        scale = max(1.0, float(np.max(np.abs(a))))
        asym = np.abs(a - a.T)
        if np.max(asym) > rtol*scale:
            i, j = np.unravel_index(np.argmax(asym), asym.shape)
            msg = (f"Similarity matrix is not symmetric: entry ({i:d},{j:d}) "
                   f"= {a[i,j]!r} but ({j:d},{i:d}) = {a[j,i]!r}.")
            raise SimilarityError(msg)

        a = 0.5*(a + a.T)
        a.flags.writeable = False
        self._entries = a

    @property
    def size(self):
        return self._entries.shape[0]

    @property
    def entries(self):
        return self._entries

    def __getitem__(self, index):
        return self._entries[index]

    def __array__(self, dtype = None, copy = None):
        if dtype is None:
            return self._entries.copy()
        return self._entries.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, SimilarityMatrix):
            return NotImplemented
        return np.array_equal(self._entries, other._entries)

    def __repr__(self):
        return f"SimilarityMatrix(size={self.size:d})"
