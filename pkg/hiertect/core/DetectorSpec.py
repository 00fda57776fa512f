from ..utils.validation import validate_probability
from dataclasses import dataclass
from typing import Optional
from .HaarBasis import HaarBasis

# Order fixes the integer code of each detector in derived random streams
DETECTOR_KINDS = ("max_transform", "max_canonical", "global_aggregate", "fdr")

@dataclass(frozen = True)
class DetectorSpec:
    """
        A detection statistic and the false-alarm rate it is calibrated to.
        For 'fdr', 'target_far' doubles as the nominal BH level.
    """
    kind: str
    basis: Optional[HaarBasis] = None
    target_far: float = 0.05

    def __post_init__(self):
        if self.kind not in DETECTOR_KINDS:
            msg = (f"Unknown detector '{self.kind}'; expected one of "
                   f"{', '.join(DETECTOR_KINDS)}.")
            raise ValueError(msg)
        if self.kind == "max_transform" and self.basis is None:
            msg = "Detector 'max_transform' requires a basis."
            raise ValueError(msg)
        object.__setattr__(self, "target_far",
                           validate_probability(self.target_far, "target_far"))

    @property
    def code(self):
        return DETECTOR_KINDS.index(self.kind)

    def check_size(self, p):
        """
            Raises unless the basis (if any) acts on p-vectors
        """
        if self.basis is not None and self.basis.size != p:
            msg = (f"Detector basis has size {self.basis.size:d} but the "
                   f"network has {p:d} nodes.")
            raise ValueError(msg)
