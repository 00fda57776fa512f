"""
    Cross-checks of the tree model on trees small enough to enumerate:
    sampler against exact law, the two enumerations against each other, and
    the closed-form covariance against the enumerated one.
"""

from ..config.default_params import default_params
from ..utils.seeding import STAGE_ORACLE, derive_rng, validate_seed
from ..utils.validation import validate_count
from ..utils.exceptions import ModelError
from .ising import sample_patterns, enumerate_distribution, check_schedule
from .ising import empirical_distribution, total_variation
from .ising import enumerated_leaf_covariance, exact_leaf_covariance
import numpy as np
import logging

log = logging.getLogger(__name__)

def oracle_check(model, schedule, n_samples = None, seed = 0,
                 sampler_schedule = None, tv_tolerance = None,
                 cov_tolerance = None, zero_root_schedule = None,
                 zero_root_sampler = None):
    """
        Runs every check for both the uniform-root and the zero-root model
        and returns a JSON-ready report with a top-level "pass" flag.

        'schedule' drives the uniform-root mode and, unless
        'zero_root_schedule' is given, the zero-root mode too.
        'sampler_schedule' and 'zero_root_sampler' replace the schedule used
        for drawing samples only, so a wrong sampler can be shown to fail.
    """
    check_schedule(model, schedule)
    if zero_root_schedule is None:
        zero_root_schedule = schedule
        if zero_root_sampler is None:
            zero_root_sampler = sampler_schedule
    check_schedule(model, zero_root_schedule)
    if model.vertex_count > default_params["enumeration_vertex_limit"]:
        msg = (f"Oracle checks need at most "
               f"{default_params['enumeration_vertex_limit']:d} vertices, "
               f"the model has {model.vertex_count:d}.")
        raise ModelError(msg)
    if n_samples is None:
        n_samples = default_params["oracle_samples"]
    n_samples = validate_count(n_samples, "n_samples")
    seed = validate_seed(seed)
    if tv_tolerance is None:
        tv_tolerance = default_params["oracle_tv_tolerance"]
    if cov_tolerance is None:
        cov_tolerance = default_params["oracle_cov_tolerance"]
    if sampler_schedule is None:
        sampler_schedule = schedule
    if zero_root_sampler is None:
        zero_root_sampler = zero_root_schedule
    schedules = {False: (schedule, sampler_schedule),
                 True: (zero_root_schedule, zero_root_sampler)}

    report = {"d": model.d, "L": model.L, "vertices": model.vertex_count,
              "samples": n_samples, "tv_tolerance": tv_tolerance,
              "cov_tolerance": cov_tolerance, "modes": {}}
    passed = True
    for code, constrained in enumerate((False, True)):
        mode = "zero_root" if constrained else "uniform_root"
        g, sampler = schedules[constrained]
        exact = enumerate_distribution(model, g, constrained, "gibbs")
        flips = enumerate_distribution(model, g, constrained, "flips")
        keys = set(exact) | set(flips)
        agreement = max(abs(exact.get(k, 0.0) - flips.get(k, 0.0))
                        for k in keys)

        rng = derive_rng(seed, STAGE_ORACLE, code)
        X = sample_patterns(model, sampler, n_samples, rng, constrained)[0]
        tv = total_variation(empirical_distribution(X), exact)

        entry = {"tv": tv, "enumeration_agreement": agreement,
                 "patterns": len(exact), "gammas": g.to_dict()["gammas"]}
        ok = tv < tv_tolerance and agreement <= 1e-12
        if not constrained:
            closed = exact_leaf_covariance(model, g).entries
            counted = enumerated_leaf_covariance(exact, model.p).entries
            entry["max_cov_error"] = float(np.max(np.abs(closed - counted)))
            ok = ok and entry["max_cov_error"] <= cov_tolerance
        entry["pass"] = bool(ok)
        report["modes"][mode] = entry
        passed = passed and ok
        log.info("Oracle %s: TV %.4g, enumeration agreement %.2g", mode, tv,
                 agreement)

    report["pass"] = bool(passed)
    return report
