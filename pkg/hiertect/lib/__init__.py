from .hierarchy import average_linkage, agglomerate, satisfies_separation
from .hierarchy import contains_hierarchy
from .transform import build_basis, analyze, synthesize, sparsity
from .transform import fast_analyze, fast_synthesize
from .ising import flip_prob, sample, sample_patterns, enumerate_distribution
from .ising import exact_leaf_covariance, thm1_transform_bound
from .ising import thm2_canonical_bounds, scaled_schedule
from .ising import constrained_schedule, explicit_schedule
from .ising import tree_dendrogram, tree_hierarchy
from .detect import observe, stat_max_transform, stat_max_canonical
from .detect import stat_global_aggregate, stat_fdr, bh_fdr_detect
from .detect import analytic_threshold, calibrate, power_curve, thm3_mu_bound
from .detect import run_detectors
from .covlearn import empirical_cov, similarity_gap, recovery_experiment
from .covlearn import thm4_sample_bound
from .covlearn import draw_snapshots
from .oracle import oracle_check
