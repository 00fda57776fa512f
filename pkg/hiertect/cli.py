"""
    Command line front door.  Every subcommand validates its configuration
    and inputs before computing, writes its result atomically, and exits
    with 0 on success, 1 on invalid input and 2 on runtime failure.
"""

from .config.default_params import default_params
from .core.ExperimentConfig import ExperimentConfig, SCHEMA_VERSION
from .core.DetectorSpec import DetectorSpec
from .core.TreeModel import TreeModel
from .utils.exceptions import ConfigError, FileFormatError, DimensionError
from .utils.exceptions import ShapeError, SimilarityError, HierarchyError
from .utils.exceptions import ContractError, ModelError, SeparationError
from .utils.seeding import STAGE_SAMPLE, STAGE_LEARN, derive_rng
from .utils.parallel import resolve_threads
from .lib import io
from .lib.hierarchy import agglomerate
from .lib.transform import build_basis
from .lib.ising import make_schedule, sample_patterns, exact_leaf_covariance
from .lib.ising import tree_dendrogram, tree_hierarchy, perturbed_schedule
from .lib.detect import calibrate, power_curve, run_detectors
from .lib.covlearn import recovery_experiment, draw_snapshots, empirical_cov
from .lib.covlearn import LEAF_MEAN, similarity_gap, default_constants
from .lib.covlearn import thm4_sample_bound
from .lib.oracle import oracle_check
import argparse
import logging
import math
import sys

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_RUNTIME = 2

INVALID_INPUT = (ConfigError, FileFormatError, DimensionError, ShapeError,
                 SimilarityError, HierarchyError, ContractError, ModelError,
                 SeparationError)

class RuntimeFailure(Exception):
    """
        Raised by a subcommand whose computation ran but did not succeed
    """
    def __init__(self, message):
        super(RuntimeFailure, self).__init__(message)

# Setup shared by subcommands

def thread_count(args):
    try:
        return resolve_threads(args.threads)
    except ValueError as e:
        raise ConfigError(str(e))

def load_config(args):
    """
        Configuration file (or defaults) with --model, --seed and --out
        applied.  A model file replaces the tree and the whole schedule:
        beta, alpha or gammas it leaves out are unset, not defaulted.
    """
    if args.config is None:
        data = {"schema_version": SCHEMA_VERSION}
    else:
        data = io.read_config_json(args.config)
    if args.model is not None:
        m, beta, alpha, gammas = io.model_from_dict(io.read_json(args.model),
                                                    args.model)
        if isinstance(data, dict):
            data = dict(data, d = m.d, L = m.L, beta = beta, alpha = alpha,
                        gammas = gammas)
    return ExperimentConfig.from_dict(data, seed = args.seed,
                                      output = args.out)

def model_and_schedule(config, constrained):
    m = TreeModel(config.d, config.L)
    g = make_schedule(m, config.beta, config.alpha, config.gammas,
                      constrained = constrained)
    return m, g

def output_path(args, config = None):
    if args.out is not None:
        return args.out
    if config is not None and config.output is not None:
        return config.output
    return io.STDIO

def run_header(config, command):
    """
        Comment lines describing a run; no timing or thread information, so
        equal runs give equal bytes
    """
    params = {"command": command, "seed": config.seed, "d": config.d,
              "L": config.L, "p": config.d**config.L, "beta": config.beta,
              "alpha": config.alpha, "sigma": config.sigma,
              "constrain_root_zero": config.constrain_root_zero}
    if config.gammas is not None:
        params["gammas"] = " ".join("inf" if g is None else repr(g)
                                    for g in config.gammas)
    lines = io.comment_lines(params)
    assumed = [name for name in default_params["assumed"]
               if getattr(config, name) == default_params[name]]
    if assumed and config.gammas is None:
        values = " ".join(f"{name}={getattr(config, name)!r}"
                          for name in assumed)
        lines.append(f"# {values} are assumed defaults, not values stated "
                     f"for the reference experiment")
    return lines

def detector_basis(config):
    """
        Basis for the max_transform detector, from the configured source
    """
    m, g = model_and_schedule(config, constrained = False)
    if config.basis_source == "tree":
        D = tree_dendrogram(m)
    elif config.basis_source == "covariance":
        D = agglomerate(exact_leaf_covariance(m, g))
    else:
        rng = derive_rng(config.seed, STAGE_LEARN)
        S = draw_snapshots(m, g, config.sigma, config.learn_snapshots, rng)
        D = agglomerate(empirical_cov(S, LEAF_MEAN))
    log.info("Built %s basis on %d leaves", config.basis_source, m.p)
    return build_basis(D)

def detector_specs(config):
    basis = None
    if "max_transform" in config.detectors:
        basis = detector_basis(config)
    return [DetectorSpec(kind, basis if kind == "max_transform" else None,
                         config.target_far) for kind in config.detectors]

def calibrations(config, specs, p, threads, progress):
    return [calibrate(s, p, config.sigma, config.calibration_trials,
                      config.seed, threads, progress) for s in specs]

def save_calibrations(args, config, cals, command):
    if args.calibration_out is not None:
        io.write_calibration_csv(args.calibration_out, cals,
                                 run_header(config, command))

# Subcommands

def cmd_cluster(args):
    S = io.read_similarity_csv(args.input)
    D = agglomerate(S)
    io.write_json(output_path(args), io.dendrogram_to_dict(D))

def cmd_basis(args):
    if args.dendrogram is not None:
        D = io.dendrogram_from_dict(io.read_json(args.dendrogram),
                                    args.dendrogram)
        B = build_basis(D)
    elif args.similarity is not None:
        B = build_basis(agglomerate(io.read_similarity_csv(args.similarity)))
    else:
        config = load_config(args)
        B = detector_basis(config)
    if args.format == "csv":
        io.write_matrix_csv(output_path(args), B.matrix)
    else:
        io.write_json(output_path(args), io.basis_to_dict(B))

def cmd_sample(args):
    config = load_config(args)
    m, g = model_and_schedule(config, config.constrain_root_zero)
    rng = derive_rng(config.seed, STAGE_SAMPLE)
    X, D, A, roots, _ = sample_patterns(m, g, config.samples, rng,
                                        config.constrain_root_zero)
    io.write_patterns_csv(output_path(args, config), X, D, A, roots,
                          run_header(config, "sample"))

def cmd_detect(args):
    config = load_config(args)
    Y = io.read_matrix_csv(args.input)
    p = config.d**config.L
    if Y.shape[1] != p:
        raise DimensionError(p, Y.shape[1])
    threads = thread_count(args)
    specs = detector_specs(config)
    cals = calibrations(config, specs, p, threads, args.progress)
    save_calibrations(args, config, cals, "detect")
    decisions = run_detectors(Y, config.sigma, specs,
                              [c.threshold for c in cals])
    header = run_header(config, "detect") + io.comment_lines(
        {f"threshold_{c.kind}": c.threshold for c in cals})
    io.write_decisions_csv(output_path(args, config), config.detectors,
                           decisions, header)

def _run_power(config, args, command):
    threads = thread_count(args)
    m, g = model_and_schedule(config, config.constrain_root_zero)
    specs = detector_specs(config)
    cals = calibrations(config, specs, m.p, threads, args.progress)
    save_calibrations(args, config, cals, command)
    curve = power_curve(m, g, config.mu_grid, config.sigma, specs, cals,
                        config.trials, config.seed, config.constrain_root_zero,
                        threads, args.progress)
    header = run_header(config, command) + io.comment_lines(
        {"target_far": config.target_far,
         "calibration_trials": config.calibration_trials,
         "basis_source": config.basis_source})
    io.write_power_csv(output_path(args, config), curve, header)

def cmd_power(args):
    _run_power(load_config(args), args, "power")

def cmd_reproduce_fig2(args):
    """
        Power curves of the four detectors on the 6-ary tree of depth 4
    """
    config = load_config(args)
    if config.trials < 2000:
        msg = (f"The reference comparison needs >= 2000 trials, got "
               f"{config.trials:d}.")
        raise ConfigError(msg)
    _run_power(config, args, "reproduce-fig2")

def sample_size_bound(config, m, g):
    """
        Gap of the exact covariance and the snapshot count that the
        concentration bound guarantees at confidence 1 - delta
    """
    tau = similarity_gap(exact_leaf_covariance(m, g), tree_hierarchy(m)).tau
    params = {"tau": tau, "delta": config.delta, "M": config.M}
    if math.isfinite(tau):
        c1, c2 = default_constants(config.sigma, config.M)
        params["n_bound"] = thm4_sample_bound(tau, m.p, config.delta, c1, c2)
    return params

def cmd_learn(args):
    config = load_config(args)
    if args.snapshots is not None:
        S = io.read_snapshots_csv(args.snapshots, config.M)
        mean = LEAF_MEAN if config.recenter else 0.0
        D = agglomerate(empirical_cov(S, mean))
        log.info("Clustered %d snapshots of %d nodes", S.n, S.p)
        io.write_json(output_path(args, config), io.dendrogram_to_dict(D))
        return
    m, g = model_and_schedule(config, constrained = False)
    table = recovery_experiment(m, g, config.sigma, config.n_grid,
                                config.recovery_trials, config.seed,
                                config.recenter,
                                thread_count(args), args.progress)
    header = run_header(config, "learn") + io.comment_lines(
        {"recenter": config.recenter, **sample_size_bound(config, m, g)})
    io.write_recovery_csv(output_path(args, config), table, header)

def cmd_oracle_check(args):
    """
        The uniform-root mode is checked under the level-scaled schedule and
        the zero-root mode under the schedule detection uses
    """
    config = load_config(args)
    m, g = model_and_schedule(config, constrained = False)
    g0 = make_schedule(m, config.beta, config.alpha, config.gammas,
                       constrained = config.constrain_root_zero)
    sampler, sampler0 = None, None
    if args.perturb is not None:
        sampler = perturbed_schedule(g, args.perturb)
        sampler0 = perturbed_schedule(g0, args.perturb)
    report = oracle_check(m, g, config.oracle_samples, config.seed, sampler,
                          zero_root_schedule = g0,
                          zero_root_sampler = sampler0)
    report["model"] = io.model_to_dict(m, g)
    io.write_json(output_path(args, config), report)
    if not report["pass"]:
        raise RuntimeFailure("Oracle check failed.")

COMMANDS = {"cluster": cmd_cluster, "basis": cmd_basis, "sample": cmd_sample,
            "detect": cmd_detect, "power": cmd_power, "learn": cmd_learn,
            "oracle-check": cmd_oracle_check,
            "reproduce-fig2": cmd_reproduce_fig2}

def build_parser():
    common = argparse.ArgumentParser(add_help = False)
    common.add_argument("--config", default = None,
                        help = "experiment configuration (JSON)")
    common.add_argument("--model", default = None,
                        help = "tree model JSON; replaces d, L and the schedule")
    common.add_argument("--seed", type = int, default = None,
                        help = "master seed, unsigned 64-bit")
    common.add_argument("--out", default = None,
                        help = "output file, '-' for stdout (default)")
    common.add_argument("--threads", type = int, default = None,
                        help = "worker threads; results do not depend on it")
    common.add_argument("--verbose", action = "store_true",
                        help = "debug logging")
    common.add_argument("--progress", action = "store_true",
                        help = "show trial progress on stderr")

    parser = argparse.ArgumentParser(prog = "hiertect",
        description = "Hierarchical clustering, unbalanced Haar transforms "
                      "and structured activation detection on networks.")
    sub = parser.add_subparsers(dest = "command", required = True)

    p = sub.add_parser("cluster", parents = [common],
                       help = "cluster a similarity matrix (CSV) into a "
                              "dendrogram (JSON)")
    p.add_argument("input", help = "similarity matrix CSV, '-' for stdin")

    p = sub.add_parser("basis", parents = [common],
                       help = "emit the unbalanced Haar basis")
    source = p.add_mutually_exclusive_group()
    source.add_argument("--dendrogram", default = None,
                        help = "dendrogram JSON from 'cluster'")
    source.add_argument("--similarity", default = None,
                        help = "similarity matrix CSV")
    p.add_argument("--format", choices = ("json", "csv"), default = "json")

    sub.add_parser("sample", parents = [common],
                   help = "draw activation patterns from the tree model")

    p = sub.add_parser("detect", parents = [common],
                       help = "run calibrated detectors on observations")
    p.add_argument("input", help = "observations CSV, one row per snapshot")
    p.add_argument("--calibration-out", default = None,
                   help = "also write the calibration table (CSV)")

    p = sub.add_parser("power", parents = [common],
                       help = "power curves for the configured experiment")
    p.add_argument("--calibration-out", default = None,
                   help = "also write the calibration table (CSV)")

    p = sub.add_parser("learn", parents = [common],
                       help = "hierarchy recovery rate versus snapshot count")
    p.add_argument("--snapshots", default = None,
                   help = "cluster these snapshots (CSV) into a dendrogram "
                          "instead")

    p = sub.add_parser("oracle-check", parents = [common],
                       help = "check the sampler against exact enumeration")
    p.add_argument("--perturb", type = float, default = None,
                   help = "shift the sampler's flip probabilities (negative "
                          "control)")

    p = sub.add_parser("reproduce-fig2", parents = [common],
                       help = "power comparison on the 1296-leaf tree")
    p.add_argument("--calibration-out", default = None,
                   help = "also write the calibration table (CSV)")
    return parser

def main(argv = None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors
        return EXIT_OK if not e.code else EXIT_INVALID
    logging.basicConfig(level = logging.DEBUG if args.verbose
                        else logging.INFO, stream = sys.stderr,
                        format = "%(levelname)s %(name)s: %(message)s")
    try:
        if args.threads is not None:
            thread_count(args)
        COMMANDS[args.command](args)
    except INVALID_INPUT as e:
        log.error("%s", e)
        return EXIT_INVALID
    except RuntimeFailure as e:
        log.error("%s", e)
        return EXIT_RUNTIME
    except Exception:
        log.exception("Command '%s' failed", args.command)
        return EXIT_RUNTIME
    return EXIT_OK

if __name__ == "__main__":
    sys.exit(main())
