from dataclasses import dataclass
from typing import Tuple
import math

@dataclass(frozen = True)
class CalibrationResult:
    """
        Null-calibrated threshold of one detector, with the false-alarm rate
        re-measured on fresh trials and its Wilson 95% interval.
    """
    kind: str
    threshold: float
    target_far: float
    trials: int
    achieved_far: float
    achieved_far_ci: Tuple[float, float]

    def __post_init__(self):
        if self.trials < 1000:
            msg = f"Calibration needs at least 1000 trials, got {self.trials:d}."
            raise ValueError(msg)
        if not math.isfinite(self.threshold):
            raise ValueError("Calibrated threshold must be finite.")

    @property
    def consistent(self):
        """
            True when the target rate lies inside the interval
        """
        low, high = self.achieved_far_ci
        return low <= self.target_far <= high
