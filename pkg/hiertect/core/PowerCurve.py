from dataclasses import dataclass, field
from typing import List, NamedTuple

class PowerRow(NamedTuple):
    kind: str
    mu: float
    power: float
    stderr: float
    trials: int
    threshold: float

@dataclass
class PowerCurve:
    """
        Detection probability per (detector, mu), in insertion order.
    """
    rows: List[PowerRow] = field(default_factory = list)

    def add(self, row):
        if not 0 <= row.power <= 1:
            msg = f"Power {row.power:g} is not a probability."
            raise ValueError(msg)
        self.rows.append(row)

    def kinds(self):
        return list(dict.fromkeys(r.kind for r in self.rows))

    def power(self, kind, mu):
        for r in self.rows:
            if r.kind == kind and r.mu == mu:
                return r
        raise KeyError((kind, mu))

    def series(self, kind):
        return [r for r in self.rows if r.kind == kind]
