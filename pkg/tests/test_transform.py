from hiertect.core import Dendrogram, TreeModel
from hiertect.lib.hierarchy import agglomerate
from hiertect.lib.transform import build_basis, analyze, synthesize
from hiertect.lib.transform import fast_analyze, fast_synthesize, sparsity
from hiertect.lib.transform import orthonormality_error, signal_tolerance
from hiertect.lib.ising import scaled_schedule
from hiertect.lib.ising import sample_patterns, tree_dendrogram
from hiertect.lib.ising import exact_leaf_covariance
from hiertect.utils.exceptions import DimensionError
import numpy as np
import pytest

s = 1/np.sqrt(2)

def random_basis(rng, p):
    a = rng.normal(size = (p, p))
    return build_basis(agglomerate((a + a.T)/2))

def test_two_leaves():
    B = build_basis(Dendrogram(2, [(0, 1, 2, 0.5)]))
    np.testing.assert_allclose(B.matrix, [[-s, s], [s, s]], atol = 1e-15)
    assert B.provenance == ((0, 1),)

def test_one_leaf():
    B = build_basis(Dendrogram(1, []))
    np.testing.assert_array_equal(B.matrix, [[1.0]])

def test_four_leaf_chain():
    D = Dendrogram(4, [(0, 1, 4, 0.0), (2, 3, 5, 0.0), (4, 5, 6, 0.0)])
    B = build_basis(D)
    np.testing.assert_allclose(B.column(2), [-0.5, -0.5, 0.5, 0.5])
    np.testing.assert_allclose(B.column(0), [-s, s, 0, 0])
    np.testing.assert_allclose(B.column(1), [0, 0, -s, s])
    np.testing.assert_allclose(B.column(3), [0.5]*4)

def test_unbalanced_column():
    # {0} against {1, 2}
    D = Dendrogram(3, [(1, 2, 3, 0.0), (0, 3, 4, 0.0)])
    b = build_basis(D).column(1)
    np.testing.assert_allclose(b, [-np.sqrt(2/3), np.sqrt(1/6),
                                   np.sqrt(1/6)])

@pytest.mark.parametrize("p", [2, 7, 64, 256])
def test_orthonormal_with_vanishing_moments(rng, p):
    B = random_basis(rng, p)
    assert orthonormality_error(B) <= 1e-9
    assert np.all(np.abs(B.matrix[:, :-1].sum(axis = 0)) <= 1e-12)

def test_support_is_merged_cluster(rng):
    a = rng.normal(size = (20, 20))
    D = agglomerate((a + a.T)/2)
    B = build_basis(D)
    for k, m in enumerate(D.merges):
        members = D.cluster(m.parent).members
        np.testing.assert_array_equal(B.support(k), members)
        col = B.column(k)
        assert np.all(col[list(D.cluster(m.left).members)] < 0)
        assert np.all(col[list(D.cluster(m.right).members)] > 0)
        outside = np.setdiff1d(np.arange(20), members)
        assert np.all(col[outside] == 0)

def test_parseval_and_round_trip(rng):
    B = random_basis(rng, 64)
    V = rng.normal(size = (100, 64))
    C = analyze(B, V)
    norms = np.linalg.norm(V, axis = 1)
    assert np.max(np.abs(np.linalg.norm(C, axis = 1) - norms)/norms) <= 1e-9
    assert np.max(np.abs(synthesize(B, C) - V)) < 1e-9

def test_fast_paths_match_dense(rng):
    B = random_basis(rng, 50)
    V = rng.normal(size = (10, 50))
    np.testing.assert_allclose(fast_analyze(B, V), analyze(B, V),
                               atol = 1e-9)
    np.testing.assert_allclose(fast_analyze(B, V[0]), analyze(B, V[0]),
                               atol = 1e-9)
    C = analyze(B, V)
    np.testing.assert_allclose(fast_synthesize(B, C), V, atol = 1e-9)
    np.testing.assert_allclose(fast_synthesize(B, C[3]), V[3], atol = 1e-9)

def test_constant_and_zero_vectors(rng):
    B = random_basis(rng, 16)
    c = analyze(B, np.ones(16))
    np.testing.assert_allclose(c[:-1], 0, atol = 1e-12)
    assert c[-1] == pytest.approx(4.0)
    assert sparsity(c) == 1
    np.testing.assert_array_equal(analyze(B, np.zeros(16)), np.zeros(16))
    assert sparsity(np.zeros(16), 1e-9) == 0

def test_constant_column_synthesis(rng):
    B = random_basis(rng, 9)
    e = np.zeros(9)
    e[-1] = 1
    np.testing.assert_allclose(synthesize(B, e), np.full(9, 1/3))

def test_cluster_indicator_coefficients(rng):
    a = rng.normal(size = (32, 32))
    D = agglomerate((a + a.T)/2)
    B = build_basis(D)
    # Merges above the cluster created by merge k
    k = 20
    c = D.cluster(32 + k)
    x = np.zeros(32)
    x[list(c.members)] = 1
    coef = analyze(B, x)
    parent_of = {}
    for j, m in enumerate(D.merges):
        parent_of[m.left] = j
        parent_of[m.right] = j
    path = set()
    node = 32 + k
    while node in parent_of:
        path.add(parent_of[node])
        node = 32 + parent_of[node]
    nonzero = set(np.flatnonzero(np.abs(coef) > 1e-12))
    assert nonzero <= path | {31}
    assert np.max(np.abs(coef)) <= np.sqrt(c.size) + 1e-12

def test_round_trip_recovers_patterns(rng):
    m = TreeModel(3, 3)
    g = scaled_schedule(m, 0.5)
    X = sample_patterns(m, g, 50, rng)[0]
    B = build_basis(agglomerate(exact_leaf_covariance(m, g)))
    np.testing.assert_array_equal(np.rint(synthesize(B, analyze(B, X))), X)

def test_sparsity_of_cluster_unions():
    m = TreeModel(3, 3)
    B = build_basis(tree_dendrogram(m))
    x = np.zeros(m.p)
    x[0:3] = 1
    x[9:18] = 1
    x[26] = 1
    assert sparsity(analyze(B, x)) <= 3*m.d*m.L

def test_tolerances_scale_with_magnitude():
    v = np.array([0.0, 2.0, -4.0, 1.0])
    assert signal_tolerance(v) == pytest.approx(1e-9*2*4)
    assert sparsity(np.array([1e-10, 1.0, 0.0]), 0.0) == 2

def test_dimension_mismatch(rng):
    B = random_basis(rng, 5)
    with pytest.raises(DimensionError):
        analyze(B, np.ones(4))
    with pytest.raises(DimensionError):
        synthesize(B, np.ones(6))

@pytest.mark.slow
@pytest.mark.parametrize("p", [1296, 4096])
def test_large_bases_stay_orthonormal(rng, p):
    a = rng.normal(size = (p, p))
    B = build_basis(agglomerate((a + a.T)/2))
    assert orthonormality_error(B) <= 1e-9
    v = rng.normal(size = p)
    c = fast_analyze(B, v)
    assert abs(np.linalg.norm(c) - np.linalg.norm(v)) <= 1e-9*np.linalg.norm(v)
