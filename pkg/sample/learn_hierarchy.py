"""
    How many noisy snapshots does average linkage need to recover every
    subtree of a 3-ary tree of depth 3?  Compares the empirical recovery
    rate to the sample-size bound derived from the covariance gap.
"""

from hiertect import TreeModel, scaled_schedule, exact_leaf_covariance
from hiertect import tree_hierarchy, similarity_gap, recovery_experiment
from hiertect import thm4_sample_bound
from hiertect.lib.covlearn import default_constants
from hiertect.lib import io

# Filename for saving results
filename = "saved/learn_hierarchy.csv"

d, L = 3, 3
beta = 0.5
sigma = 0.1
delta = 0.05
n_grid = [2, 5, 10, 20, 50, 100, 200, 500]

m = TreeModel(d, L)
g = scaled_schedule(m, beta)

tau = similarity_gap(exact_leaf_covariance(m, g), tree_hierarchy(m)).tau
n_bound = thm4_sample_bound(tau, m.p, delta, *default_constants(sigma))
print(f"Covariance gap {tau:.4f}; bound guarantees recovery from "
      f"{n_bound:d} snapshots")

table = recovery_experiment(m, g, sigma, n_grid, 200, seed = 3, threads = 4,
                            progress = True)
for row in table.rows:
    print(f"n = {row.n:4d}   recovered {row.recovery_prob:.3f} "
          f"(+/- {row.stderr:.3f})")
print(f"Smallest n reaching 95%: {table.smallest_n(m.p)}")

io.write_recovery_csv(filename, table, io.comment_lines({"d": d, "L": L,
                      "beta": beta, "sigma": sigma, "tau": tau,
                      "n_bound": n_bound}))
