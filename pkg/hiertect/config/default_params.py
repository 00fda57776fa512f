# DEFAULT PARAMETERS FOR EXPERIMENTS

default_params = {}

# CONFIG FILE SCHEMA VERSION

default_params["schema_version"] = 1

# MASTER SEED – EVERY TRIAL DERIVES ITS OWN STREAM FROM IT

default_params["seed"] = 1296

# TREE MODEL – DEGREE AND DEPTH, p = d**L LEAVES

default_params["d"] = 6
default_params["L"] = 4

# INTERACTION SCHEDULE – gamma_l = l*beta*ln(d), INFINITE BELOW
# level0 = ceil(alpha/beta*L).  THESE TWO VALUES ARE ASSUMPTIONS: THE
# REFERENCE DETECTION EXPERIMENT DOES NOT STATE THEM

default_params["beta"] = 0.75
default_params["alpha"] = 0.5
default_params["assumed"] = ("beta", "alpha")

# ROOT FIXED TO 0 WHEN DRAWING PATTERNS FOR DETECTION

default_params["constrain_root_zero"] = True

# NOISE STANDARD DEVIATION

default_params["sigma"] = 0.1

# SIGNAL STRENGTHS – 0.06 TO 0.20 IN STEPS OF 0.02

default_params["mu_grid"] = (0.06, 0.08, 0.1, 0.12, 0.14, 0.16, 0.18, 0.2)

# TARGET FALSE ALARM RATE

default_params["target_far"] = 0.05

# MONTE-CARLO TRIALS PER (DETECTOR, mu) AND FOR CALIBRATION

default_params["trials"] = 2000
default_params["calibration_trials"] = 10000

# DETECTORS COMPARED

default_params["detectors"] = ("max_transform", "max_canonical",
                               "global_aggregate", "fdr")

# BASIS FOR max_transform: "covariance" (clustering the exact leaf
# covariance), "tree" (binarized generating tree) OR "learned" (clustering
# learn_snapshots noisy snapshots)

default_params["basis_source"] = "covariance"
default_params["learn_snapshots"] = 200

# SNAPSHOT COUNTS FOR THE RECOVERY EXPERIMENT, AND RECENTERING BY THE
# KNOWN LEAF MEAN 1/2

default_params["n_grid"] = (1, 2, 5, 10, 20, 50, 100, 200, 500)
default_params["recenter"] = True
default_params["recovery_trials"] = 100

# NUMBER OF PATTERNS EMITTED BY THE sample COMMAND

default_params["samples"] = 100

# RELATIVE TOLERANCE FOR COUNTING NON-ZERO TRANSFORM COEFFICIENTS

default_params["sparsity_rtol"] = 1e-9

# EXHAUSTIVE ENUMERATION LIMIT (TOTAL TREE VERTICES)

default_params["enumeration_vertex_limit"] = 22

# ORACLE CHECK – SAMPLES AND PASS TOLERANCES

default_params["oracle_samples"] = 100000
default_params["oracle_tv_tolerance"] = 0.02
default_params["oracle_cov_tolerance"] = 1e-10

# SAMPLE-COMPLEXITY BOUND – CONFIDENCE AND SIGNAL BOUND M

default_params["delta"] = 0.05
default_params["M"] = 1.0

# TRIALS PER WORK BLOCK (FIXED, SO RESULTS DO NOT DEPEND ON THREADS)

default_params["chunk_size"] = 256
