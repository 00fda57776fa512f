"""
    Clusters a noisy two-level block similarity on 40 nodes, then shows that
    an activation covering whole blocks needs only a handful of Haar
    coefficients while its canonical representation needs one per node.
"""

from hiertect import agglomerate, build_basis, analyze, sparsity
from hiertect import contains_hierarchy, HierarchySet
import numpy as np

rng = np.random.default_rng(40)

# Four blocks of ten nodes, paired into two super-blocks
blocks = [range(0, 10), range(10, 20), range(20, 30), range(30, 40)]
pairs = [range(0, 20), range(20, 40)]

S = np.full((40, 40), 0.1)
for c in pairs:
    S[np.ix_(c, c)] = 0.4
for c in blocks:
    S[np.ix_(c, c)] = 0.8
noise = rng.normal(0, 0.02, (40, 40))
S += (noise + noise.T)/2

D = agglomerate(S)
H = HierarchySet.with_singletons([list(c) for c in blocks + pairs], 40)
print(f"Blocks recovered: {contains_hierarchy(D, H)}")

B = build_basis(D)
x = np.zeros(40)
x[0:20] = 1
x[30:40] = 1
print(f"Active nodes: {int(x.sum())}, "
      f"Haar coefficients: {sparsity(analyze(B, x))}")
