"""
    Learning the hierarchy from noisy snapshots: empirical second moments,
    the separation gap, the recovery experiment and the sample-size bound.
"""

from ..utils.validation import validate_positive, validate_probability
from ..utils.validation import validate_count
from ..utils.seeding import STAGE_RECOVERY, derive_rng, validate_seed
from ..utils.parallel import run_chunked
from ..utils.exceptions import ModelError, SeparationError, DimensionError
from ..core.SimilarityMatrix import SimilarityMatrix
from ..core.SnapshotSet import SnapshotSet
from ..core.GapStats import GapStats
from ..core.RecoveryTable import RecoveryTable, RecoveryRow
from ..config.default_params import default_params
from .hierarchy import agglomerate, contains_hierarchy, _separation_margins
from .ising import sample_patterns, check_schedule, tree_hierarchy
from time import time
import numpy as np
import logging
import math

log = logging.getLogger(__name__)

# Mean of every leaf in the model with a uniform root
LEAF_MEAN = 0.5

def empirical_cov(S, mean = 0.0):
    """
        Uncentered second moments r_ij = (1/n) sum_k y_i^(k) y_j^(k) of the
        snapshots, after subtracting a known 'mean' (0 by default)
    """
    if not isinstance(S, SnapshotSet):
        S = SnapshotSet(S)
    Y = S.data - mean
    return SimilarityMatrix(Y.T @ Y/S.n)

def max_offdiag_deviation(R_hat, R):
    """
        max_{i != j} |R_hat_ij - R_ij|
    """
    a, b = np.asarray(R_hat), np.asarray(R)
    if a.shape != b.shape:
        raise DimensionError(b.shape[0], a.shape[0])
    if a.shape[0] < 2:
        return 0.0
    off = ~np.eye(a.shape[0], dtype = bool)
    return float(np.max(np.abs(a - b)[off]))

def similarity_gap(R, H):
    """
        Smallest margin, over nested clusters of H, between the weakest
        similarity inside a cluster and the strongest one leaving it.
        Raises SeparationError unless the margin is positive.
    """
    margins = _separation_margins(R, H)
    if not margins:
        # No nested pair to separate; any similarity works
        return GapStats(math.inf)
    cluster, tau = min(margins, key = lambda cm: cm[1])
    if not tau > 0:
        raise SeparationError(tau)
    return GapStats(tau, cluster)

def variance_bound(sigma, M = 1.0):
    """
        2 sigma^4 + 4 M^2 sigma^2 + 4 M^4, bounding the variance of a product
        of two noisy bounded observations
    """
    return 2*sigma**4 + 4*M**2*sigma**2 + 4*M**4

def default_constants(sigma, M = 1.0):
    """
        (c1, c2) = (2, 1 / (16 variance_bound))
    """
    return 2.0, 1/(16*variance_bound(sigma, M))

def thm4_rhs(tau, p, delta, c1, c2):
    """
        (1 / (c2 tau^2)) ln(c1 p^2 / delta)
    """
    return math.log(c1*p**2/delta)/(c2*tau**2)

def thm4_sample_bound(tau, p, delta, c1, c2):
    """
        Smallest integer n >= 2 with n / ln n >= thm4_rhs(...).  n / ln n
        increases for n >= 3, so the answer is bracketed by doubling and then
        found by bisection.
    """
    tau = validate_positive(tau, "tau")
    delta = validate_probability(delta, "delta")
    c1 = validate_positive(c1, "c1")
    c2 = validate_positive(c2, "c2")
    rhs = thm4_rhs(tau, p, delta, c1, c2)

    def ok(n):
        return n/math.log(n) >= rhs

    if ok(2):
        return 2
    lo, hi = 2, 3
    while not ok(hi):
        lo, hi = hi, 2*hi
    # lo fails, hi passes
    while hi - lo > 1:
        mid = (lo + hi)//2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi

def thm4_failure_bound(n, tau, p, var_bound):
    """
        2 p^2 exp(-n tau^2 / (16 var_bound ln n)), a union bound on the
        probability that some empirical covariance is off by tau/2 or more
    """
    if n < 2:
        return 1.0
    return min(1.0, 2*p**2*math.exp(-n*tau**2/(16*var_bound*math.log(n))))

def draw_snapshots(model, schedule, sigma, n, rng):
    """
        n snapshots y = x + e: patterns from the model with a uniform root
        plus N(0, sigma^2) noise
    """
    X = sample_patterns(model, schedule, n, rng)[0]
    return SnapshotSet(X + sigma*rng.standard_normal(X.shape))

def recovery_experiment(m, g, sigma, n_grid, trials, seed, recenter = True,
                        threads = 1, progress = False):
    """
        For every n in 'n_grid', the fraction of trials in which average
        linkage on the empirical covariance of n snapshots reproduces every
        subtree of the generating tree.

        Each trial draws max(n_grid) snapshots once and scores each n on the
        first n of them, so recovery rates at different n are paired.
    """
    check_schedule(m, g)
    if not g.finite:
        msg = "Recovery needs finite strengths at every level."
        raise ModelError(msg)
    sigma = validate_positive(sigma, "sigma")
    n_grid = sorted(set(validate_count(n, "n_grid entry") for n in n_grid))
    trials = validate_count(trials, "trials")
    seed = validate_seed(seed)
    H = tree_hierarchy(m)
    mean = LEAF_MEAN if recenter else 0.0
    n_max = n_grid[-1]

    def block(start, stop):
        out = np.zeros((stop - start, len(n_grid)), dtype = bool)
        for i, t in enumerate(range(start, stop)):
            rng = derive_rng(seed, STAGE_RECOVERY, m.d, m.L, t)
            S = draw_snapshots(m, g, sigma, n_max, rng)
            for j, n in enumerate(n_grid):
                R = empirical_cov(S.head(n), mean)
                out[i, j] = contains_hierarchy(agglomerate(R), H)
        return out

    t0 = time()
    hits = run_chunked(block, trials, threads,
                       max(1, default_params["chunk_size"]//16), progress,
                       f"Recovery p={m.p:d}")
    table = RecoveryTable()
    for j, n in enumerate(n_grid):
        P = float(np.mean(hits[:, j]))
        table.add(RecoveryRow(m.p, n, trials, P, math.sqrt(P*(1 - P)/trials)))
    log.info("Recovery on p=%d over %d trials in %.1fs", m.p, trials,
             time() - t0)
    return table
