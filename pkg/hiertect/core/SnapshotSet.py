from ..utils.validation import validate_positive
from ..utils.checking import check_numerical_return_array
from ..utils.exceptions import ShapeError
import numpy as np

class SnapshotSet:

    def __init__(self, data, M = 1.0):
        """
            n i.i.d. noisy network snapshots stored as an n x p matrix, with
            'M' a uniform bound on the magnitude of the noiseless signal.
        """
        data = check_numerical_return_array(data)
        if data.ndim != 2 or data.shape[0] < 1 or data.shape[1] < 1:
            msg = (f"Snapshots must form a non-empty n x p matrix, got shape "
                   f"{data.shape}.")
            raise ShapeError(msg)
        if not np.all(np.isfinite(data)):
            raise ValueError("Snapshots contain non-finite values.")
        data = data.copy()
        data.flags.writeable = False
        self.data = data
        self.M = validate_positive(M, "M")

    @property
    def n(self):
        return self.data.shape[0]

    @property
    def p(self):
        return self.data.shape[1]

    def head(self, n):
        """
            The first n snapshots
        """
        return SnapshotSet(self.data[:n], self.M)
