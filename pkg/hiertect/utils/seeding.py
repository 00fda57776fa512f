"""
    Derived random streams.  Every Monte-Carlo trial owns a generator keyed
    by (master seed, stage, ..., trial index), so results do not depend on
    how trials are scheduled across threads.
"""

import numpy as np

# Stage codes, part of every derived key
STAGE_CALIBRATE = 0
STAGE_VERIFY = 1
STAGE_POWER = 2
STAGE_RECOVERY = 3
STAGE_SAMPLE = 4
STAGE_ORACLE = 5
STAGE_LEARN = 6

SEED_LIMIT = 2**64

def validate_seed(seed):
    """
        Checks that 'seed' is an unsigned 64-bit integer and returns it
    """
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        msg = f"Seed must be an integer, got {str(type(seed))}."
        raise TypeError(msg)
    if not 0 <= seed < SEED_LIMIT:
        msg = f"Seed {seed:d} is outside the unsigned 64-bit range."
        raise ValueError(msg)
    return int(seed)

def derive_rng(seed, *key):
    """
        Returns an independent numpy Generator for the integer 'key' under the
        master 'seed'.  Equal (seed, key) pairs always give equal streams.
    """
    seed = validate_seed(seed)
    spawn_key = tuple(int(k) for k in key)
    return np.random.default_rng(np.random.SeedSequence(entropy = seed,
                                                        spawn_key = spawn_key))
