from hiertect.core import ExperimentConfig, GammaSchedule, PowerCurve, PowerRow
from hiertect.core import RecoveryTable, RecoveryRow, CalibrationResult
from hiertect.core import DetectorSpec, TreeModel
from hiertect.config.default_params import default_params
from hiertect.utils import Counter
from hiertect.utils.seeding import derive_rng, validate_seed
from hiertect.utils.parallel import run_chunked, resolve_threads, THREADS_ENV
from hiertect.utils.validation import validate_positive, validate_probability
from hiertect.utils.validation import validate_count, validate_grid
from hiertect.utils.validation import validate_vectors
from hiertect.utils.exceptions import ConfigError, DimensionError, ModelError
from hiertect.utils.exceptions import ShapeError
import numpy as np
import io
import pytest

def test_validation():
    assert validate_positive(2, "x") == 2.0
    assert validate_probability(0.05, "far") == 0.05
    assert validate_count(np.int64(3), "n") == 3
    assert validate_grid([0, 0.5], "mu", minimum = 0) == (0.0, 0.5)
    for bad in (0, -1, np.inf, np.nan):
        with pytest.raises(ValueError):
            validate_positive(bad, "x")
    for bad in (0, 1, 1.5):
        with pytest.raises(ValueError):
            validate_probability(bad, "far")
    with pytest.raises(TypeError):
        validate_count(2.0, "n")
    with pytest.raises(TypeError):
        validate_count(True, "n")
    with pytest.raises(ValueError):
        validate_grid([], "mu")
    with pytest.raises(ShapeError):
        validate_positive([1, 2], "x")

def test_vector_validation():
    with pytest.raises(DimensionError):
        validate_vectors(np.zeros((2, 3)), 4)
    with pytest.raises(ShapeError):
        validate_vectors(np.zeros((2, 2, 2)))
    with pytest.raises(ValueError):
        validate_vectors([1.0, np.nan])

def test_seeds():
    assert validate_seed(2**64 - 1) == 2**64 - 1
    with pytest.raises(ValueError):
        validate_seed(2**64)
    with pytest.raises(ValueError):
        validate_seed(-1)
    with pytest.raises(TypeError):
        validate_seed("1")

def test_derived_streams():
    a = derive_rng(7, 2, 0, 5).random(4)
    b = derive_rng(7, 2, 0, 5).random(4)
    np.testing.assert_array_equal(a, b)
    for other in (derive_rng(8, 2, 0, 5), derive_rng(7, 2, 0, 6),
                  derive_rng(7, 3, 0, 5)):
        assert not np.array_equal(other.random(4), a)

def test_thread_resolution(monkeypatch):
    monkeypatch.delenv(THREADS_ENV, raising = False)
    assert resolve_threads() == 1
    assert resolve_threads(3) == 3
    monkeypatch.setenv(THREADS_ENV, "4")
    assert resolve_threads() == 4
    assert resolve_threads(2) == 2
    with pytest.raises(ValueError):
        resolve_threads(0)

def test_chunked_runs_keep_order():
    def block(start, stop):
        return np.arange(start, stop)**2
    expected = np.arange(1000)**2
    for threads in (1, 3, 8):
        np.testing.assert_array_equal(run_chunked(block, 1000, threads, 64),
                                      expected)
    assert run_chunked(block, 0).size == 0

def test_counter_writes_status():
    stream = io.StringIO()
    counter = Counter(10, "Work", stream)
    for _ in range(10):
        counter()
    counter.close()
    text = stream.getvalue()
    assert "Work" in text and "100%" in text and "Complete" in text

def test_default_config():
    config = ExperimentConfig.defaults()
    assert (config.d, config.L, config.sigma) == (6, 4, 0.1)
    assert config.mu_grid == default_params["mu_grid"]
    assert config.to_dict()["schema_version"] == 1
    again = ExperimentConfig.from_dict(config.to_dict())
    assert again == config

def test_config_overrides():
    config = ExperimentConfig.defaults(seed = 5, output = None)
    assert config.seed == 5
    assert config.replace(trials = 10).trials == 10
    with pytest.raises(ConfigError):
        ExperimentConfig.defaults(colour = "red")

@pytest.mark.parametrize("data", [
    {},
    {"schema_version": 1, "unknown": 1},
    {"schema_version": 1, "sigma": -0.1},
    {"schema_version": 1, "target_far": 1.0},
    {"schema_version": 1, "detectors": ["max_transform", "median"]},
    {"schema_version": 1, "detectors": []},
    {"schema_version": 1, "basis_source": "random"},
    {"schema_version": 1, "gammas": [1.0, 2.0]},
    {"schema_version": 1, "gammas": [1.0, -2.0, 1.0, 1.0]},
    {"schema_version": 1, "beta": None, "alpha": None},
    {"schema_version": 1, "beta": 1.5},
    {"schema_version": 1, "seed": 2**64},
    {"schema_version": 1, "n_grid": [10, 0]},
    "not an object"])
def test_invalid_configs(data):
    with pytest.raises(ConfigError):
        ExperimentConfig.from_dict(data)

def test_schedule_record():
    with pytest.raises(ModelError):
        GammaSchedule([1.0], [0.1, 0.2])
    with pytest.raises(ModelError):
        GammaSchedule([1.0], [1.5])
    with pytest.raises(ModelError):
        GammaSchedule([1.0], [0.2], alpha = 0.5)
    g = GammaSchedule([np.inf, 1.0], [0.0, 0.25])
    assert not g.finite
    assert g.to_dict()["gammas"] == [None, 1.0]
    np.testing.assert_allclose(g.edge_factors(), [1.0, 0.5])

def test_tree_model_layout():
    m = TreeModel(3, 2)
    assert (m.p, m.vertex_count) == (9, 13)
    assert m.offset(2) == 4
    assert m.parent(4) == 1 and m.parent(12) == 3
    with pytest.raises(ValueError):
        m.parent(0)
    with pytest.raises(ValueError):
        TreeModel(1, 3)

def test_result_records():
    curve = PowerCurve()
    curve.add(PowerRow("fdr", 0.1, 0.4, 0.01, 10, 2.0))
    assert curve.kinds() == ["fdr"]
    with pytest.raises(KeyError):
        curve.power("fdr", 0.2)
    with pytest.raises(ValueError):
        curve.add(PowerRow("fdr", 0.2, 1.5, 0.0, 10, 2.0))
    table = RecoveryTable()
    table.add(RecoveryRow(4, 10, 20, 0.5, 0.1))
    assert table.smallest_n(4) is None
    with pytest.raises(ValueError):
        CalibrationResult("fdr", 1.0, 0.05, 999, 0.05, (0.04, 0.06))
    cal = CalibrationResult("fdr", 1.0, 0.05, 1000, 0.05, (0.04, 0.06))
    assert cal.consistent

def test_detector_spec():
    with pytest.raises(ValueError):
        DetectorSpec("median")
    with pytest.raises(ValueError):
        DetectorSpec("max_transform")
    assert DetectorSpec("fdr", target_far = 0.1).code == 3
