from ..utils.validation import validate_nonnegative, validate_positive
from dataclasses import dataclass

@dataclass(frozen = True)
class NoiseModel:
    """
        Observation model y_i = mu x_i + e_i with e_i iid N(0, sigma^2).
    """
    mu: float
    sigma: float

    def __post_init__(self):
        object.__setattr__(self, "mu", validate_nonnegative(self.mu, "mu"))
        object.__setattr__(self, "sigma",
                           validate_positive(self.sigma, "sigma"))
