from ..utils.exceptions import ModelError
import numpy as np
import math

class GammaSchedule:

    def __init__(self, gammas, flip_probs, beta = None, alpha = None,
                 level0 = None):
        """
            Per-level interaction strengths gamma_l and edge-flip
            probabilities q_l for levels l = 1..L (entry l-1 of each tuple).
            gamma_l = inf means the level never flips.

            'beta' is set for level-scaled schedules (gamma_l = l beta ln d),
            'alpha' and 'level0' for the constrained variant in which every
            level below 'level0' has infinite strength.  Build schedules with
            the factories in hiertect.lib.ising.
        """
        gammas = tuple(float(g) for g in gammas)
        flip_probs = tuple(float(q) for q in flip_probs)
        if len(gammas) == 0 or len(gammas) != len(flip_probs):
            msg = (f"A schedule needs one gamma and one flip probability per "
                   f"level; got {len(gammas):d} and {len(flip_probs):d}.")
            raise ModelError(msg)
        for level, q in enumerate(flip_probs, start = 1):
            if not 0 <= q <= 1:
                msg = f"Flip probability {q:g} at level {level:d} is invalid."
                raise ModelError(msg)
        if (alpha is None) != (level0 is None):
            msg = "'alpha' and 'level0' must be given together."
            raise ModelError(msg)

        self.gammas = gammas
        self.flip_probs = flip_probs
        self.beta = None if beta is None else float(beta)
        self.alpha = None if alpha is None else float(alpha)
        self.level0 = None if level0 is None else int(level0)

    @property
    def depth(self):
        return len(self.gammas)

    @property
    def finite(self):
        """
            True when every level has a finite interaction strength
        """
        return all(math.isfinite(g) for g in self.gammas)

    @property
    def constrained(self):
        return self.alpha is not None

    def gamma(self, level):
        return self.gammas[level - 1]

    def q(self, level):
        return self.flip_probs[level - 1]

    def edge_factors(self):
        """
            Per-edge correlation factors 1 - 2 q_l = tanh(gamma_l / 2)
        """
        return 1 - 2*np.array(self.flip_probs)

    def to_dict(self):
        return {"beta": self.beta, "alpha": self.alpha, "level0": self.level0,
                "gammas": [g if math.isfinite(g) else None
                           for g in self.gammas]}

    def __eq__(self, other):
        if not isinstance(other, GammaSchedule):
            return NotImplemented
        return (self.gammas, self.flip_probs, self.beta, self.alpha,
                self.level0) == (other.gammas, other.flip_probs, other.beta,
                                 other.alpha, other.level0)

    def __repr__(self):
        gammas = ", ".join(f"{g:.4g}" for g in self.gammas)
        return f"GammaSchedule(gammas=({gammas}))"
