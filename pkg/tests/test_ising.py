from hiertect.core import TreeModel, PatternSample
from hiertect.lib.ising import flip_prob, scaled_schedule, constrained_schedule
from hiertect.lib.ising import explicit_schedule, perturbed_schedule
from hiertect.lib.ising import cutoff_level, sample, sample_patterns
from hiertect.lib.ising import enumerate_distribution, empirical_distribution
from hiertect.lib.ising import total_variation, enumerated_leaf_covariance
from hiertect.lib.ising import exact_leaf_covariance, meet_levels
from hiertect.lib.ising import tree_hierarchy, tree_dendrogram
from hiertect.lib.ising import expected_flip_counts, expected_active_counts
from hiertect.lib.ising import flip_support_bound, thm1_transform_bound
from hiertect.lib.ising import thm2_canonical_bounds
from hiertect.lib.hierarchy import contains_hierarchy, agglomerate
from hiertect.lib.transform import build_basis, analyze, sparsity
from hiertect.utils.exceptions import ModelError
from scipy.stats import binom, chisquare
import numpy as np
import math
import pytest

def test_flip_prob():
    assert flip_prob(math.log(2)) == pytest.approx(1/3)
    assert flip_prob(math.inf) == 0.0
    assert flip_prob(2*0.75*math.log(6)) == pytest.approx(1/(1 + 6**1.5))
    for gamma in (0.0, -1.0, math.nan):
        with pytest.raises(ModelError):
            flip_prob(gamma)

def test_scaled_schedule_decreasing():
    m = TreeModel(6, 4)
    g = scaled_schedule(m, 0.75)
    q = np.array(g.flip_probs)
    assert np.all(np.diff(q) < 0)
    assert np.all((q > 0) & (q < 0.5))
    assert g.finite and not g.constrained
    with pytest.raises(ModelError):
        scaled_schedule(m, 1.5)

def test_constrained_cutoff():
    m = TreeModel(6, 4)
    g = constrained_schedule(m, 0.75, 0.5)
    assert g.level0 == 3
    assert g.gammas[:2] == (math.inf, math.inf)
    assert g.q(1) == 0.0 and g.q(3) > 0
    # alpha/beta * L is exactly 2 here
    assert cutoff_level(m, 0.6, 0.3) == 2
    with pytest.raises(ModelError):
        constrained_schedule(m, 0.5, 0.5)

def test_explicit_schedule_accepts_infinite_levels():
    g = explicit_schedule([None, math.log(2)])
    assert g.flip_probs == (0.0, pytest.approx(1/3))

def test_schedule_depth_must_match():
    m = TreeModel(2, 3)
    g = scaled_schedule(TreeModel(2, 2), 0.5)
    with pytest.raises(ModelError):
        sample_patterns(m, g, 1, np.random.default_rng(0))

def test_two_leaf_distribution():
    m = TreeModel(2, 1)
    g = explicit_schedule([math.log(2)])
    for method in ("gibbs", "flips"):
        P = enumerate_distribution(m, g, method = method)
        assert P[(0, 0)] == pytest.approx(5/18, abs = 1e-12)
        assert P[(1, 1)] == pytest.approx(5/18, abs = 1e-12)
        assert P[(0, 1)] == pytest.approx(2/9, abs = 1e-12)
        assert sum(P.values()) == pytest.approx(1, abs = 1e-12)

@pytest.mark.parametrize("d,L", [(2, 1), (2, 2), (2, 3), (3, 2)])
def test_enumerations_agree(d, L):
    m = TreeModel(d, L)
    g = scaled_schedule(m, 0.6)
    for constrained in (False, True):
        P = enumerate_distribution(m, g, constrained, "gibbs")
        Q = enumerate_distribution(m, g, constrained, "flips")
        assert set(P) == set(Q)
        assert max(abs(P[k] - Q[k]) for k in P) <= 1e-12
        assert sum(P.values()) == pytest.approx(1, abs = 1e-12)

def test_zero_root_all_zero_probability():
    # With one level, all-zero leaves means no edge flipped
    m = TreeModel(3, 1)
    g = explicit_schedule([math.log(2)])
    P = enumerate_distribution(m, g, True)
    assert P[(0, 0, 0)] == pytest.approx((2/3)**3, abs = 1e-12)

def test_zero_root_all_zero_includes_cancelling_flips(small_tree,
                                                      small_schedule):
    P = enumerate_distribution(small_tree, small_schedule, True)
    no_flips = np.prod([(1 - small_schedule.q(l))**small_tree.edge_count(l)
                        for l in (1, 2)])
    assert P[(0, 0, 0, 0)] > no_flips

def test_uniform_root_marginals(small_tree, small_schedule):
    P = enumerate_distribution(small_tree, small_schedule)
    for i in range(small_tree.p):
        assert sum(v for k, v in P.items() if k[i] == 1) \
            == pytest.approx(0.5, abs = 1e-12)

def test_enumeration_size_limit():
    with pytest.raises(ModelError):
        enumerate_distribution(TreeModel(2, 5), scaled_schedule(TreeModel(2, 5),
                                                                0.5))

def test_infinite_levels_give_point_mass():
    m = TreeModel(2, 2)
    g = explicit_schedule([None, None])
    assert enumerate_distribution(m, g, True) == {(0, 0, 0, 0): 1.0}
    X = sample_patterns(m, g, 100, np.random.default_rng(1), True)[0]
    assert not X.any()

def test_sample_record(rng):
    m = TreeModel(3, 3)
    g = scaled_schedule(m, 0.5)
    s = sample(m, g, False, rng)
    assert isinstance(s, PatternSample)
    assert s.z.shape == (m.vertex_count,)
    np.testing.assert_array_equal(s.z[-m.p:], s.x)
    assert s.A[-1] == s.x.sum()
    assert s.A[0] == s.root_value == s.z[0]
    assert all(s.D[l-1] <= m.edge_count(l) for l in range(1, m.L + 1))
    # Flips are exactly the child/parent disagreements
    levels = m.vertex_levels()
    for l in range(1, m.L + 1):
        child = np.flatnonzero(levels == l)
        parents = [m.parent(int(v)) for v in child]
        assert s.D[l-1] == np.count_nonzero(s.z[child] != s.z[parents])

def test_zero_root_sample(rng):
    m = TreeModel(2, 3)
    s = sample(m, scaled_schedule(m, 0.5), True, rng)
    assert s.root_value == 0

def test_sampler_matches_enumeration(small_tree, small_schedule, rng):
    for constrained in (False, True):
        exact = enumerate_distribution(small_tree, small_schedule, constrained)
        X = sample_patterns(small_tree, small_schedule, 100000, rng,
                            constrained)[0]
        assert total_variation(empirical_distribution(X), exact) < 0.02

def test_wrong_sampler_is_detected(small_tree, small_schedule, rng):
    exact = enumerate_distribution(small_tree, small_schedule)
    bad = perturbed_schedule(small_schedule, 0.1)
    X = sample_patterns(small_tree, bad, 100000, rng)[0]
    assert total_variation(empirical_distribution(X), exact) > 0.02

def test_flip_counts_mean(detection_tree, rng):
    g = scaled_schedule(detection_tree, 0.75)
    n = 10000
    D = sample_patterns(detection_tree, g, n, rng)[1]
    expected = expected_flip_counts(detection_tree, g)
    for l in range(1, detection_tree.L + 1):
        E, q = detection_tree.edge_count(l), g.q(l)
        se = math.sqrt(E*q*(1 - q)/n)
        assert abs(D[:, l-1].mean() - expected[l-1]) < 3*se

@pytest.mark.slow
def test_flip_counts_are_binomial(detection_tree, rng):
    g = scaled_schedule(detection_tree, 0.75)
    n = 10000
    D = sample_patterns(detection_tree, g, n, rng)[1]
    for l in range(1, detection_tree.L + 1):
        E, q = detection_tree.edge_count(l), g.q(l)
        k = np.arange(E + 1)
        expected = n*binom.pmf(k, E, q)
        observed = np.bincount(D[:, l-1], minlength = E + 1).astype(float)
        # Pool the sparse tails into their neighbours
        keep = expected >= 5
        lo, hi = np.flatnonzero(keep)[[0, -1]]
        f_exp = expected[lo:hi+1].copy()
        f_obs = observed[lo:hi+1].copy()
        f_exp[0] += expected[:lo].sum()
        f_obs[0] += observed[:lo].sum()
        f_exp[-1] += expected[hi+1:].sum()
        f_obs[-1] += observed[hi+1:].sum()
        assert chisquare(f_obs, f_exp).pvalue > 0.001

@pytest.mark.parametrize("constrained", [False, True])
def test_active_counts_mean(detection_tree, detection_schedule, rng,
                            constrained):
    n = 4000
    A = sample_patterns(detection_tree, detection_schedule, n, rng,
                        constrained)[2]
    expected = expected_active_counts(detection_tree, detection_schedule,
                                      constrained)
    se = A.std(axis = 0)/math.sqrt(n)
    assert np.all(np.abs(A.mean(axis = 0) - expected) <= 4*se + 1e-12)

def test_two_leaf_covariance():
    m = TreeModel(2, 1)
    R = exact_leaf_covariance(m, explicit_schedule([math.log(2)]))
    np.testing.assert_allclose(R.entries, [[0.25, 1/36], [1/36, 0.25]],
                               atol = 1e-15)

@pytest.mark.parametrize("d,L", [(2, 2), (2, 3), (3, 2), (4, 2)])
def test_covariance_matches_enumeration(d, L):
    m = TreeModel(d, L)
    g = scaled_schedule(m, 0.7)
    exact = exact_leaf_covariance(m, g).entries
    counted = enumerated_leaf_covariance(enumerate_distribution(m, g), m.p)
    assert np.max(np.abs(exact - counted.entries)) <= 1e-10

def test_covariance_increases_with_meeting_level():
    m = TreeModel(2, 3)
    R = exact_leaf_covariance(m, scaled_schedule(m, 0.9)).entries
    meet = meet_levels(m)
    values = [np.unique(np.round(R[meet == l], 14)) for l in range(m.L + 1)]
    assert all(v.size == 1 for v in values)
    assert all(values[l][0] < values[l+1][0] for l in range(m.L))

def test_covariance_needs_uniform_root(small_tree, small_schedule):
    with pytest.raises(ModelError):
        exact_leaf_covariance(small_tree, small_schedule, True)

def test_tree_hierarchy_and_dendrogram():
    m = TreeModel(3, 2)
    H = tree_hierarchy(m)
    assert len(H) == 1 + 3 + 9
    assert frozenset({3, 4, 5}) in H
    D = tree_dendrogram(m)
    assert len(D.merges) == m.p - 1
    assert contains_hierarchy(D, H)

def test_flip_support_bound(detection_tree, rng):
    g = scaled_schedule(detection_tree, 0.75)
    B = build_basis(tree_dendrogram(detection_tree))
    for _ in range(50):
        s = sample(detection_tree, g, False, rng)
        assert sparsity(analyze(B, s.x)) <= flip_support_bound(detection_tree,
                                                               s)

def test_transform_bound():
    m = TreeModel(6, 4)
    assert thm1_transform_bound(m, scaled_schedule(m, 1.0)) == pytest.approx(288)
    assert thm1_transform_bound(m, scaled_schedule(m, 0.75)) \
        == pytest.approx(288*1296**0.25)
    with pytest.raises(ModelError):
        thm1_transform_bound(m, explicit_schedule([1.0]*4))

def test_transform_sparsity_below_bound(detection_tree, rng):
    g = scaled_schedule(detection_tree, 0.75)
    B = build_basis(tree_dendrogram(detection_tree))
    X = sample_patterns(detection_tree, g, 1000, rng)[0]
    counts = sparsity(analyze(B, X))
    assert np.percentile(counts, 95) < thm1_transform_bound(detection_tree, g)

def test_canonical_bounds(detection_tree, detection_schedule):
    low, high = thm2_canonical_bounds(detection_tree, detection_schedule,
                                      0.5, 2.0)
    assert low == pytest.approx(0.5*36)
    assert high == pytest.approx(2.0*4*36)
    with pytest.raises(ModelError):
        thm2_canonical_bounds(detection_tree,
                              scaled_schedule(detection_tree, 0.75), 1, 1)

@pytest.mark.parametrize("d,L", [(2, 1), (2, 3), (3, 1), (3, 2), (4, 1)])
@pytest.mark.parametrize("constrained", [False, True])
def test_sampler_matches_enumeration_on_more_trees(d, L, constrained, rng):
    # At most 2**9 leaf patterns, so 4e5 samples keep the sampling error of
    # the distance below 0.02
    m = TreeModel(d, L)
    g = scaled_schedule(m, 0.75)
    exact = enumerate_distribution(m, g, constrained)
    X = sample_patterns(m, g, 400000, rng, constrained)[0]
    assert total_variation(empirical_distribution(X), exact) < 0.02

def log_slope(sizes, values):
    return np.polyfit(np.log(sizes), np.log(values), 1)[0]

@pytest.mark.slow
def test_sparsity_scaling_with_network_size():
    beta = 0.75
    rng = np.random.default_rng(36)
    sizes, depths, canonical, expected = [], [], [], []
    transform = {"tree": [], "covariance": []}
    for L in (2, 3, 4):
        m = TreeModel(6, L)
        g = scaled_schedule(m, beta)
        X = sample_patterns(m, g, 1000, rng)[0]
        bases = {"tree": tree_dendrogram(m),
                 "covariance": agglomerate(exact_leaf_covariance(m, g))}
        for source, D in bases.items():
            counts = sparsity(analyze(build_basis(D), X))
            transform[source].append(counts.mean())

        g0 = constrained_schedule(m, beta, 0.5)
        A = sample_patterns(m, g0, 1000, rng, True)[2]
        canonical.append(A[:, -1].mean())
        expected.append(expected_active_counts(m, g0, True)[-1])
        sizes.append(m.p)
        depths.append(L)

    for source, counts in transform.items():
        # The flip-support bound grows like L p^(1 - beta); the factor L
        # lifts the slope over three depths well above 1 - beta
        slope = log_slope(sizes, counts)
        assert 0.42 < slope < 0.58, source
        per_level = log_slope(sizes, np.array(counts)/np.array(depths))
        assert abs(per_level - (1 - beta)) <= 0.15, source
    assert abs(log_slope(sizes, transform["tree"])
               - log_slope(sizes, transform["covariance"])) < 0.08

    # The cutoff level ceil(alpha/beta L) moves with L, so the active leaf
    # count of the constrained model grows faster than p^(1 - beta)
    assert log_slope(sizes, expected) == pytest.approx(0.702, abs = 0.01)
    assert abs(log_slope(sizes, canonical)
               - log_slope(sizes, expected)) < 0.05
