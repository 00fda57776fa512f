from ..utils.checking import check_binary_return_array
from dataclasses import dataclass
from typing import Optional
import numpy as np

@dataclass(frozen = True, eq = False)
class PatternSample:
    """
        One draw of the latent tree model.

        x       leaf activation pattern (length p)
        z       all vertex values in level order, or None
        D       edge flips per level l = 1..L
        A       active vertices per level l = 0..L
    """
    x: np.ndarray
    D: np.ndarray
    A: np.ndarray
    root_value: int
    z: Optional[np.ndarray] = None

    def __post_init__(self):
        x = check_binary_return_array(self.x)
        D = np.asarray(self.D, dtype = np.int64)
        A = np.asarray(self.A, dtype = np.int64)
        if x.ndim != 1:
            raise ValueError("Pattern 'x' must be a 1-D binary vector.")
        if A.shape[0] != D.shape[0] + 1:
            msg = "Active counts cover levels 0..L and flip counts 1..L."
            raise ValueError(msg)
        if A[-1] != int(x.sum()):
            msg = "The leaf active count must equal the number of active leaves."
            raise ValueError(msg)
        if self.z is not None:
            z = check_binary_return_array(self.z)
            if not np.array_equal(z[-x.shape[0]:], x):
                msg = "Leaf values of 'z' must equal 'x'."
                raise ValueError(msg)
            z.flags.writeable = False
            object.__setattr__(self, "z", z)
        for name, a in (("x", x), ("D", D), ("A", A)):
            a.flags.writeable = False
            object.__setattr__(self, name, a)
        object.__setattr__(self, "root_value", int(self.root_value))

    @property
    def active_count(self):
        """
            ||x||_0
        """
        return int(self.A[-1])

    @property
    def flip_count(self):
        return int(self.D.sum())
