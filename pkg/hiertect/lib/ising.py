"""
    Multi-scale latent Ising model on a uniform d-ary tree.

    A vertex at level l differs from its parent with probability
    q_l = 1/(1 + exp(gamma_l)), independently over edges, so patterns are
    sampled exactly from the root down.  Small trees can also be enumerated
    exhaustively, which serves as the oracle for the sampler and for the
    closed-form leaf covariance.
"""

from ..config.default_params import default_params
from ..utils.validation import validate_gamma, validate_count
from ..utils.validation import validate_positive
from ..utils.exceptions import ModelError
from ..core.GammaSchedule import GammaSchedule
from ..core.PatternSample import PatternSample
from ..core.SimilarityMatrix import SimilarityMatrix
from ..core.HierarchySet import HierarchySet
from ..core.Dendrogram import Dendrogram, Merge
from scipy.special import expit, logit
import numpy as np
import logging
import math

log = logging.getLogger(__name__)

# Schedules

def flip_prob(gamma):
    """
        Edge-flip probability 1/(1 + e^gamma); 0 when gamma is infinite
    """
    try:
        gamma = validate_gamma(gamma)
    except ValueError as e:
        raise ModelError(str(e))
    return float(expit(-gamma))

def _check_beta(beta):
    beta = validate_positive(beta, "beta")
    if beta > 1:
        msg = f"beta = {beta:g} is outside (0, 1]."
        raise ModelError(msg)
    return beta

def scaled_schedule(m, beta):
    """
        gamma_l = l * beta * ln(d) for l = 1..L
    """
    beta = _check_beta(beta)
    gammas = [l*beta*math.log(m.d) for l in range(1, m.L + 1)]
    return GammaSchedule(gammas, [flip_prob(g) for g in gammas], beta = beta)

def cutoff_level(m, beta, alpha):
    """
        First level with finite strength in the constrained model,
        ceil(alpha/beta * L).  The ratio is rounded to 9 decimals first so
        that exact products such as 2/3 * 3 are not pushed up by rounding.
    """
    return int(math.ceil(round(alpha/beta*m.L, 9)))

def constrained_schedule(m, beta, alpha):
    """
        Scaled schedule with gamma_l = inf for every level below
        cutoff_level(m, beta, alpha)
    """
    beta = _check_beta(beta)
    alpha = validate_positive(alpha, "alpha")
    if not alpha < beta:
        msg = f"The constrained model needs alpha < beta, got {alpha:g}, {beta:g}."
        raise ModelError(msg)
    level0 = cutoff_level(m, beta, alpha)
    gammas = [math.inf if l < level0 else l*beta*math.log(m.d)
              for l in range(1, m.L + 1)]
    return GammaSchedule(gammas, [flip_prob(g) for g in gammas], beta = beta,
                         alpha = alpha, level0 = level0)

def explicit_schedule(gammas, beta = None):
    """
        Schedule from per-level strengths; None stands for an infinite level
    """
    gammas = [math.inf if g is None else float(g) for g in gammas]
    return GammaSchedule(gammas, [flip_prob(g) for g in gammas], beta = beta)

def make_schedule(m, beta = None, alpha = None, gammas = None,
                  constrained = False):
    """
        Explicit 'gammas' win; otherwise the constrained schedule when
        'constrained' is set and 'alpha' is known, else the scaled one
    """
    if gammas is not None:
        g = explicit_schedule(gammas, beta)
    elif beta is None:
        raise ModelError("A schedule needs either beta or explicit gammas.")
    elif constrained and alpha is not None:
        g = constrained_schedule(m, beta, alpha)
    else:
        g = scaled_schedule(m, beta)
    check_schedule(m, g)
    return g

def perturbed_schedule(g, delta):
    """
        Copy of 'g' with every flip probability shifted by 'delta' (clipped
        to [0, 1]).  Only useful as a deliberately wrong model.
    """
    q = np.clip(np.array(g.flip_probs) + delta, 0, 1)
    return GammaSchedule(logit(1 - q), q)

def check_schedule(m, g):
    if g.depth != m.L:
        msg = (f"Schedule covers {g.depth:d} levels but the tree has depth "
               f"{m.L:d}.")
        raise ModelError(msg)

# Sampling

def sample_patterns(m, g, n, rng, constrain_root_zero = False,
                    keep_vertices = False):
    """
        Draws n independent patterns.  Returns (X, D, A, roots, Z) where X is
        n x p, D holds flips per level 1..L, A active vertices per level
        0..L, and Z is the n x |V| vertex matrix in level order (None unless
        'keep_vertices').
    """
    check_schedule(m, g)
    n = validate_count(n, "n", minimum = 0)
    if constrain_root_zero:
        z = np.zeros((n, 1), dtype = np.int8)
    else:
        z = rng.integers(0, 2, size = (n, 1), dtype = np.int8)
    roots = z[:, 0].copy()
    D = np.zeros((n, m.L), dtype = np.int64)
    A = np.zeros((n, m.L + 1), dtype = np.int64)
    A[:, 0] = roots
    levels = [z] if keep_vertices else None

    for l in range(1, m.L + 1):
        q = g.q(l)
        z = np.repeat(z, m.d, axis = 1)
        if q > 0:
            flips = rng.random((n, m.d**l)) < q
            z ^= flips.astype(np.int8)
            D[:, l-1] = flips.sum(axis = 1)
        A[:, l] = z.sum(axis = 1)
        if keep_vertices:
            levels.append(z)

    Z = np.concatenate(levels, axis = 1) if keep_vertices else None
    return z, D, A, roots, Z

def sample(m, g, constrain_root_zero, rng):
    """
        One exact draw of the tree model as a PatternSample
    """
    X, D, A, roots, Z = sample_patterns(m, g, 1, rng, constrain_root_zero,
                                        keep_vertices = True)
    return PatternSample(X[0], D[0], A[0], int(roots[0]), Z[0])

# Enumeration oracle

def enumerate_distribution(m, g, constrain_root_zero = False, method = "gibbs",
                           vertex_limit = None):
    """
        Exact law of the leaf pattern, by summing over all 2^|V| vertex
        configurations.  Returns {pattern tuple: probability} for patterns
        of positive probability.

        method "gibbs" weighs each configuration by exp(sum over edges of
        gamma_l * [child == parent]) and normalizes, with infinite levels
        acting as hard agreement constraints.  method "flips" multiplies the
        independent per-edge flip probabilities and the root law directly,
        without normalizing, so the two are independent computations.
    """
    check_schedule(m, g)
    if vertex_limit is None:
        vertex_limit = default_params["enumeration_vertex_limit"]
    V = m.vertex_count
    if V > vertex_limit:
        msg = (f"Exhaustive enumeration is limited to {vertex_limit:d} "
               f"vertices; the tree d={m.d:d}, L={m.L:d} has {V:d}.")
        raise ModelError(msg)
    if method not in ("gibbs", "flips"):
        raise ValueError(f"Unknown enumeration method '{method}'.")

    # Bit v of a code is the value of vertex v; the root is bit 0
    step = 2 if constrain_root_zero else 1
    codes = np.arange(0, 2**V, step, dtype = np.int64)
    logw = np.zeros(codes.shape[0])
    valid = np.ones(codes.shape[0], dtype = bool)

    with np.errstate(divide = "ignore"):
        for l in range(1, m.L + 1):
            gamma, q = g.gamma(l), g.q(l)
            if method == "flips":
                log_keep, log_flip = np.log1p(-q), np.log(q)
            for k in range(m.d**l):
                child = m.offset(l) + k
                parent = m.offset(l - 1) + k//m.d
                agree = (((codes >> child) ^ (codes >> parent)) & 1) == 0
                if method == "flips":
                    logw += np.where(agree, log_keep, log_flip)
                elif math.isinf(gamma):
                    valid &= agree
                else:
                    logw += gamma*agree

    if method == "flips":
        if not constrain_root_zero:
            logw += math.log(0.5)
        w = np.exp(logw)
    else:
        logw[~valid] = -np.inf
        w = np.exp(logw - logw[valid].max())
        w[~valid] = 0.0
        w /= w.sum()

    p = m.p
    leaf_codes = codes >> m.offset(m.L)
    probs = np.bincount(leaf_codes, weights = w, minlength = 2**p)
    bits = np.arange(p)
    out = {}
    for code in np.flatnonzero(probs > 0):
        out[tuple(int(b) for b in (code >> bits) & 1)] = float(probs[code])
    log.debug("Enumerated %d configurations (%s)", codes.shape[0], method)
    return out

def empirical_distribution(X):
    """
        Relative frequency of each distinct row of the 0/1 matrix X
    """
    X = np.asarray(X)
    rows, counts = np.unique(X, axis = 0, return_counts = True)
    total = counts.sum()
    return {tuple(int(b) for b in r): c/total for r, c in zip(rows, counts)}

def total_variation(P, Q):
    """
        Total-variation distance between two {pattern: probability} maps
    """
    keys = set(P) | set(Q)
    return 0.5*sum(abs(P.get(k, 0.0) - Q.get(k, 0.0)) for k in keys)

def enumerated_leaf_covariance(dist, p):
    """
        Leaf covariance matrix of a {pattern: probability} map over p leaves
    """
    X = np.array(list(dist.keys()), dtype = np.float64).reshape(-1, p)
    w = np.array(list(dist.values()))
    mean = w @ X
    second = X.T @ (w[:, None]*X)
    return SimilarityMatrix(second - np.outer(mean, mean))

# Closed forms

def meet_levels(m):
    """
        p x p matrix of the level of the deepest vertex above both leaves
        (L on the diagonal)
    """
    idx = np.arange(m.p)
    meet = np.zeros((m.p, m.p), dtype = np.int64)
    for level in range(1, m.L + 1):
        block = idx//m.d**(m.L - level)
        meet[block[:, None] == block[None, :]] = level
    return meet

def exact_leaf_covariance(m, g, constrain_root_zero = False):
    """
        cov(x_i, x_j) = 1/4 * prod over edges on the i-j path of (1 - 2 q_l)

        The path climbs from both leaves to the meeting vertex, so every level
        below the meeting level contributes its factor twice.  Only valid for
        the model with a uniform root.
    """
    check_schedule(m, g)
    if constrain_root_zero:
        msg = "The leaf covariance formula needs a uniformly random root."
        raise ModelError(msg)
    f2 = g.edge_factors()**2
    # tail[k] = prod of f_l^2 over levels l = k+1..L
    tail = np.ones(m.L + 1)
    for k in range(m.L - 1, -1, -1):
        tail[k] = tail[k + 1]*f2[k]
    return SimilarityMatrix(0.25*tail[meet_levels(m)])

def tree_hierarchy(m):
    """
        Leaf sets of all subtrees, root and singletons included
    """
    sets = [frozenset(m.leaves_under(level, k))
            for level in range(m.L + 1) for k in range(m.d**level)]
    return HierarchySet(sets, m.p)

def tree_dendrogram(m):
    """
        Binary dendrogram of the generating tree: inside every vertex the
        children are merged one by one from left to right, deepest vertices
        first.  Linkages record the level of the vertex.
    """
    ids = list(range(m.p))
    merges = []
    next_id = m.p
    for level in range(m.L - 1, -1, -1):
        parents = []
        for k in range(m.d**level):
            children = ids[k*m.d:(k + 1)*m.d]
            current = children[0]
            for child in children[1:]:
                merges.append(Merge(current, child, next_id, float(level)))
                current = next_id
                next_id += 1
            parents.append(current)
        ids = parents
    return Dendrogram(m.p, merges)

def expected_flip_counts(m, g):
    """
        E[D_l] = d^l q_l for l = 1..L
    """
    check_schedule(m, g)
    return np.array([m.edge_count(l)*g.q(l) for l in range(1, m.L + 1)])

def expected_active_counts(m, g, constrain_root_zero = False):
    """
        E[A_l] for l = 0..L from E[A_l] = d (1 - 2 q_l) E[A_{l-1}] + d^l q_l
    """
    check_schedule(m, g)
    A = np.zeros(m.L + 1)
    A[0] = 0.0 if constrain_root_zero else 0.5
    for l in range(1, m.L + 1):
        q = g.q(l)
        A[l] = m.d*(1 - 2*q)*A[l-1] + m.edge_count(l)*q
    return A

def flip_support_bound(m, sample):
    """
        Upper bound d * L * (total flips) + 1 on the number of non-zero
        coefficients of the pattern in the generating-tree basis
    """
    return m.d*m.L*sample.flip_count + 1

def thm1_transform_bound(m, g):
    """
        3 d L^2 p^(1 - beta)
    """
    if g.beta is None:
        raise ModelError("The transform-domain bound needs a scaled schedule.")
    return 3*m.d*m.L**2*m.p**(1 - g.beta)

def thm2_canonical_bounds(m, g, c_low, C_high):
    """
        (c_low p^(1 - alpha), C_high L p^(1 - alpha)) for the constrained
        model; the constants are not known and are left to the caller
    """
    if not g.constrained:
        raise ModelError("Canonical-domain bounds need the constrained model.")
    scale = m.p**(1 - g.alpha)
    return c_low*scale, C_high*m.L*scale
