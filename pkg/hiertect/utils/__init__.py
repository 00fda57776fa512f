from .Counter import Counter
from .seeding import derive_rng
