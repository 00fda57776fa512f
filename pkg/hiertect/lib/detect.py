"""
    Detection statistics for a noisy activation pattern y = mu x + e,
    Monte-Carlo calibration at a target false-alarm rate, and power curves.

    Every statistic accepts a single observation or an n x p stack of them
    and returns one value per observation.
"""

from ..utils.validation import validate_vectors, validate_positive
from ..utils.validation import validate_probability, validate_count
from ..utils.validation import validate_nonnegative, validate_grid
from ..utils.seeding import STAGE_CALIBRATE, STAGE_VERIFY, STAGE_POWER
from ..utils.seeding import derive_rng, validate_seed
from ..utils.parallel import run_chunked
from ..utils.exceptions import ModelError
from ..core.CalibrationResult import CalibrationResult
from ..core.PowerCurve import PowerCurve, PowerRow
from ..core.PatternSample import PatternSample
from ..config.default_params import default_params
from .transform import fast_analyze, sparsity
from .ising import sample_patterns, check_schedule
from scipy.stats import norm, binomtest
from time import time
import numpy as np
import logging
import math

log = logging.getLogger(__name__)

def observe(x, nm, rng):
    """
        y = mu x + sigma g with g standard normal, for a PatternSample, a
        pattern vector or a stack of patterns
    """
    if isinstance(x, PatternSample):
        x = x.x
    x = validate_vectors(x)
    return nm.mu*x + nm.sigma*rng.standard_normal(x.shape)

# Statistics

def stat_max_transform(y, B):
    """
        max_i |b_i^T y|
    """
    return np.max(np.abs(fast_analyze(B, y)), axis = -1)

def stat_max_canonical(y):
    """
        max_i |y_i|
    """
    y = validate_vectors(y)
    return np.max(np.abs(y), axis = -1)

def stat_global_aggregate(y):
    """
        (1/sqrt(p)) sum_i y_i
    """
    y = validate_vectors(y)
    return np.sum(y, axis = -1)/np.sqrt(y.shape[-1])

def log_pvalues(y, sigma):
    """
        Logarithms of the two-sided p-values 2 (1 - Phi(|y_i| / sigma))
    """
    return math.log(2) + norm.logsf(np.abs(y)/sigma)

def stat_fdr(y, sigma):
    """
        -min_k ln(p p_(k) / k) over the sorted p-values.  Benjamini-Hochberg
        at level q rejects at least one hypothesis exactly when this is at
        least -ln(q), so the FDR baseline can be calibrated like the other
        statistics.
    """
    y = validate_vectors(y)
    sigma = validate_positive(sigma, "sigma")
    p = y.shape[-1]
    logp = np.sort(log_pvalues(y, sigma), axis = -1)
    k = np.arange(1, p + 1)
    return -np.min(logp + np.log(p/k), axis = -1)

def bh_fdr_detect(y, sigma, level):
    """
        Benjamini-Hochberg step-up procedure on the two-sided p-values.

        Returns (reject_global, rejected) where 'rejected' holds the sorted
        indices of the k smallest p-values, k being the largest rank with
        p_(k) <= k * level / p.
    """
    y = validate_vectors(y)
    if y.ndim != 1:
        raise ValueError("bh_fdr_detect works on a single observation.")
    sigma = validate_positive(sigma, "sigma")
    level = validate_probability(level, "level")
    p = y.shape[0]
    pvals = 2*norm.sf(np.abs(y)/sigma)
    order = np.argsort(pvals, kind = "stable")
    passing = np.flatnonzero(pvals[order] <= np.arange(1, p + 1)*level/p)
    if passing.size == 0:
        return False, np.zeros(0, dtype = np.int64)
    k = passing[-1] + 1
    return True, np.sort(order[:k])

def energy_lower_bound(x, coefficients, tol = None):
    """
        sqrt(||x||_0 / ||B^T x||_0), a lower bound on the largest
        coefficient magnitude of a binary pattern
    """
    k = int(np.count_nonzero(np.asarray(x)))
    if k == 0:
        return 0.0
    return math.sqrt(k/sparsity(coefficients, tol))

def statistic(spec, y, sigma):
    """
        Value of the statistic named by 'spec' on y
    """
    if spec.kind == "max_transform":
        return stat_max_transform(y, spec.basis)
    elif spec.kind == "max_canonical":
        return stat_max_canonical(y)
    elif spec.kind == "global_aggregate":
        return stat_global_aggregate(y)
    else:
        return stat_fdr(y, sigma)

def run_detectors(y, sigma, specs, thresholds):
    """
        Boolean decisions statistic > threshold, one column per detector
    """
    y = np.atleast_2d(validate_vectors(y))
    if len(specs) != len(thresholds):
        raise ValueError("One threshold is needed per detector.")
    for spec in specs:
        spec.check_size(y.shape[1])
    return np.stack([statistic(s, y, sigma) > t
                     for s, t in zip(specs, thresholds)], axis = 1)

# Thresholds and bounds

def analytic_threshold(p, sigma, c = 0.0):
    """
        sqrt(2 sigma^2 (1 + c) ln p)
    """
    p = validate_positive(p, "p")
    if p < 2:
        raise ValueError(f"The analytic threshold needs p >= 2, got {p:g}.")
    sigma = validate_positive(sigma, "sigma")
    c = validate_nonnegative(c, "c")
    return math.sqrt(2*sigma**2*(1 + c)*math.log(p))

def analytic_far_bound(p, c = 0.0):
    """
        1 - (1 - p^-(1+c))^p, the false-alarm bound of the max statistic at
        analytic_threshold
    """
    return -math.expm1(p*math.log1p(-p**(-(1 + c))))

def miss_probability_bound(mu, max_coefficient, t, sigma):
    """
        Phi((t - mu max|b^T x|) / sigma), the miss probability bound of the
        max statistic
    """
    return float(norm.cdf((t - mu*max_coefficient)/sigma))

def exact_null_threshold(kind, p, sigma, target_far):
    """
        Threshold from the exact null law: N(0, sigma^2) for the aggregate,
        the max of p iid |N(0, sigma^2)| for both max statistics (the
        transform is orthonormal).  For 'fdr' this is the nominal BH level,
        which is conservative.
    """
    if kind == "global_aggregate":
        return sigma*norm.isf(target_far)
    elif kind in ("max_canonical", "max_transform"):
        per_node = -math.expm1(math.log1p(-target_far)/p)
        return sigma*norm.isf(per_node/2)
    elif kind == "fdr":
        return -math.log(target_far)
    raise ValueError(f"Unknown detector '{kind}'.")

def thm3_mu_bound(p, alpha, beta, sigma, c = 1.0):
    """
        c p^-kappa sqrt(2 sigma^2 ln p) with kappa = (beta - alpha)/2
    """
    alpha = validate_positive(alpha, "alpha")
    beta = validate_positive(beta, "beta")
    if alpha > beta:
        msg = f"The signal bound needs alpha <= beta, got {alpha:g} > {beta:g}."
        raise ModelError(msg)
    kappa = (beta - alpha)/2
    return c*p**(-kappa)*math.sqrt(2*sigma**2*math.log(p))

# Monte Carlo

def _null_block(spec, p, sigma, seed, stage):
    def block(start, stop):
        Y = np.stack([sigma*derive_rng(seed, stage, spec.code, t)
                      .standard_normal(p) for t in range(start, stop)])
        return statistic(spec, Y, sigma)
    return block

def wilson_interval(k, n, confidence = 0.95):
    ci = binomtest(int(k), int(n)).proportion_ci(confidence_level = confidence,
                                                 method = "wilson")
    return float(ci.low), float(ci.high)

def calibrate(spec, p, sigma, n_trials, seed, threads = 1, progress = False):
    """
        Threshold at the (1 - target_far) quantile of the statistic over
        'n_trials' noise-only draws, then the false-alarm rate re-measured
        on as many fresh draws with its Wilson 95% interval.
    """
    p = validate_count(p, "p")
    spec.check_size(p)
    sigma = validate_positive(sigma, "sigma")
    n_trials = validate_count(n_trials, "n_trials", minimum = 1000)
    seed = validate_seed(seed)
    chunk = default_params["chunk_size"]

    t0 = time()
    null = run_chunked(_null_block(spec, p, sigma, seed, STAGE_CALIBRATE),
                       n_trials, threads, chunk, progress,
                       f"Calibrate {spec.kind}")
    threshold = float(np.quantile(null, 1 - spec.target_far))
    fresh = run_chunked(_null_block(spec, p, sigma, seed, STAGE_VERIFY),
                        n_trials, threads, chunk, progress,
                        f"Verify {spec.kind}")
    k = int(np.count_nonzero(fresh > threshold))
    result = CalibrationResult(spec.kind, threshold, spec.target_far, n_trials,
                               k/n_trials, wilson_interval(k, n_trials))
    log.info("Calibrated %s: threshold %.6g, FAR %.4f (%.4f, %.4f) in %.1fs",
             spec.kind, threshold, result.achieved_far,
             *result.achieved_far_ci, time() - t0)
    return result

def power_curve(model, schedule, mu_grid, sigma, specs, calibrations, trials,
                seed, constrain_root_zero = True, threads = 1,
                progress = False):
    """
        Fraction of trials in which each detector exceeds its calibrated
        threshold, for every mu in 'mu_grid'.

        Each trial draws a fresh pattern from the tree model and fresh noise
        from the stream (seed, mu index, trial index); all detectors are
        evaluated on that same observation.
    """
    check_schedule(model, schedule)
    mu_grid = validate_grid(mu_grid, "mu_grid", minimum = 0)
    sigma = validate_positive(sigma, "sigma")
    trials = validate_count(trials, "trials")
    seed = validate_seed(seed)
    if len(specs) != len(calibrations):
        raise ValueError("One calibration is needed per detector.")
    for spec, cal in zip(specs, calibrations):
        spec.check_size(model.p)
        if cal.kind != spec.kind:
            msg = f"Calibration for '{cal.kind}' given for '{spec.kind}'."
            raise ValueError(msg)
    thresholds = np.array([c.threshold for c in calibrations])
    chunk = default_params["chunk_size"]

    curve = PowerCurve()
    for m, mu in enumerate(mu_grid):
        def block(start, stop):
            Y = np.empty((stop - start, model.p))
            for i, t in enumerate(range(start, stop)):
                rng = derive_rng(seed, STAGE_POWER, m, t)
                X = sample_patterns(model, schedule, 1, rng,
                                    constrain_root_zero)[0]
                Y[i] = mu*X[0] + sigma*rng.standard_normal(model.p)
            return np.stack([statistic(s, Y, sigma) for s in specs], axis = 1)

        stats = run_chunked(block, trials, threads, chunk, progress,
                            f"Power mu={mu:g}")
        hits = np.count_nonzero(stats > thresholds, axis = 0)
        for spec, thr, k in zip(specs, thresholds, hits):
            P = k/trials
            curve.add(PowerRow(spec.kind, mu, P, math.sqrt(P*(1 - P)/trials),
                               trials, float(thr)))
        log.info("mu = %g: %s", mu, ", ".join(f"{s.kind} {k/trials:.3f}"
                                              for s, k in zip(specs, hits)))
    return curve
