from dataclasses import dataclass
from typing import FrozenSet, Optional

@dataclass(frozen = True)
class GapStats:
    """
        Smallest margin tau between within-cluster and cross-cluster
        similarity over a hierarchy, and the cluster attaining it.
    """
    tau: float
    cluster: Optional[FrozenSet[int]] = None
