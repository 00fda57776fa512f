from dataclasses import dataclass
from typing import Tuple

@dataclass(frozen = True)
class Cluster:
    """
        A cluster of leaves: non-empty, members sorted ascending, no repeats.
    """
    id: int
    members: Tuple[int, ...]

    def __post_init__(self):
        members = tuple(int(i) for i in self.members)
        if len(members) == 0:
            msg = f"Cluster {self.id:d} is empty; clusters must be non-empty."
            raise ValueError(msg)
        if any(b <= a for a, b in zip(members, members[1:])):
            msg = (f"Cluster {self.id:d} members must be strictly increasing "
                   f"leaf indices.")
            raise ValueError(msg)
        if members[0] < 0:
            msg = f"Cluster {self.id:d} has a negative leaf index."
            raise ValueError(msg)
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, members, id = -1):
        """
            Builds a cluster from any iterable of leaf indices
        """
        return cls(id, tuple(sorted(set(int(i) for i in members))))

    @property
    def size(self):
        return len(self.members)

    @property
    def min_member(self):
        return self.members[0]

    def as_set(self):
        return frozenset(self.members)

    def __contains__(self, leaf):
        return leaf in self.as_set()

    def __len__(self):
        return len(self.members)
