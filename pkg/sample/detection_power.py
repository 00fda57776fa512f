"""
    Power of the four detectors on the 6-ary tree of depth 4 (1296 nodes),
    with the unbalanced Haar basis built by clustering the exact leaf
    covariance.  Patterns have their root fixed to 0, strengths are infinite
    down to level ceil(alpha/beta*L) and level-scaled below.

    Uses fewer trials than the full experiment; run

        hiertect reproduce-fig2 --out power.csv

    for the complete comparison.
"""

from hiertect import TreeModel, DetectorSpec, constrained_schedule
from hiertect import exact_leaf_covariance, scaled_schedule, agglomerate
from hiertect import build_basis, calibrate, power_curve
from hiertect.lib import io
import logging

logging.basicConfig(level = logging.INFO)

# Filename for saving results
filename = "saved/detection_power.csv"

d, L = 6, 4
beta, alpha = 0.75, 0.5
sigma = 0.1
mu_grid = [0.06, 0.1, 0.14, 0.2]
trials = 500
seed = 1296

m = TreeModel(d, L)
g = constrained_schedule(m, beta, alpha)

# The basis comes from the uniform-root covariance
R = exact_leaf_covariance(m, scaled_schedule(m, beta))
B = build_basis(agglomerate(R))

specs = [DetectorSpec("max_transform", B), DetectorSpec("max_canonical"),
         DetectorSpec("global_aggregate"), DetectorSpec("fdr")]
cals = [calibrate(s, m.p, sigma, 2000, seed, threads = 4, progress = True)
        for s in specs]

curve = power_curve(m, g, mu_grid, sigma, specs, cals, trials, seed,
                    threads = 4, progress = True)

for kind in curve.kinds():
    powers = "  ".join(f"{r.power:.3f}" for r in curve.series(kind))
    print(f"{kind:>18s}  {powers}")

io.write_power_csv(filename, curve, io.comment_lines({"d": d, "L": L,
                   "beta": beta, "alpha": alpha, "sigma": sigma,
                   "trials": trials, "seed": seed}))
