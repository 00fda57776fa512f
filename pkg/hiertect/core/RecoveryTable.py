from dataclasses import dataclass, field
from typing import List, NamedTuple

class RecoveryRow(NamedTuple):
    p: int
    n: int
    trials: int
    recovery_prob: float
    stderr: float

@dataclass
class RecoveryTable:
    """
        Fraction of trials in which clustering n snapshots recovered the
        generating hierarchy, per (p, n).
    """
    rows: List[RecoveryRow] = field(default_factory = list)

    def add(self, row):
        self.rows.append(row)

    def probability(self, p, n):
        for r in self.rows:
            if r.p == p and r.n == n:
                return r.recovery_prob
        raise KeyError((p, n))

    def smallest_n(self, p, level = 0.95):
        """
            Smallest n on the grid whose recovery rate reaches 'level', or
            None if no grid point does
        """
        hits = [r.n for r in self.rows if r.p == p and r.recovery_prob >= level]
        return min(hits) if hits else None
