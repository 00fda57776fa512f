from ..config.default_params import default_params
from ..utils.validation import validate_positive, validate_probability
from ..utils.validation import validate_grid, validate_count
from ..utils.exceptions import ConfigError
from ..utils.seeding import validate_seed
from .DetectorSpec import DETECTOR_KINDS
from dataclasses import dataclass, fields, asdict
from typing import Optional, Tuple
import math

SCHEMA_VERSION = 1
BASIS_SOURCES = ("covariance", "tree", "learned")

@dataclass(frozen = True)
class ExperimentConfig:
    """
        Validated experiment configuration.  Every field defaults to the
        value in hiertect.config.default_params.
    """
    seed: int
    d: int
    L: int
    beta: Optional[float]
    alpha: Optional[float]
    gammas: Optional[Tuple[Optional[float], ...]]
    constrain_root_zero: bool
    sigma: float
    mu_grid: Tuple[float, ...]
    target_far: float
    trials: int
    calibration_trials: int
    detectors: Tuple[str, ...]
    basis_source: str
    learn_snapshots: int
    n_grid: Tuple[int, ...]
    recenter: bool
    recovery_trials: int
    samples: int
    oracle_samples: int
    delta: float
    M: float
    output: Optional[str] = None

    @classmethod
    def from_dict(cls, data, **overrides):
        """
            Builds a configuration from a parsed JSON object.  The object must
            carry "schema_version"; unknown keys are rejected.  Keyword
            'overrides' that are not None replace file values.
        """
        if not isinstance(data, dict):
            raise ConfigError("Configuration must be a JSON object.")
        data = dict(data)
        version = data.pop("schema_version", None)
        if version != SCHEMA_VERSION:
            msg = (f"Configuration schema_version must be {SCHEMA_VERSION:d}, "
                   f"got {version!r}.")
            raise ConfigError(msg)

        names = [f.name for f in fields(cls)]
        unknown = sorted(set(data) - set(names))
        if unknown:
            msg = f"Unknown configuration keys: {', '.join(unknown)}."
            raise ConfigError(msg)

        values = {}
        for name in names:
            if name in data:
                values[name] = data[name]
            elif name in default_params:
                values[name] = default_params[name]
            else:
                values[name] = None
        for key, val in overrides.items():
            if key not in names:
                raise ConfigError(f"Unknown configuration override '{key}'.")
            if val is not None:
                values[key] = val
        return cls.validated(**values)

    @classmethod
    def defaults(cls, **overrides):
        return cls.from_dict({"schema_version": SCHEMA_VERSION}, **overrides)

    @classmethod
    def validated(cls, **values):
        """
            Checks every field before any computation starts; all problems are
            reported as ConfigError
        """
        try:
            v = dict(values)
            v["seed"] = validate_seed(v["seed"])
            v["d"] = validate_count(v["d"], "d", minimum = 2)
            v["L"] = validate_count(v["L"], "L", minimum = 1)
            for name in ("beta", "alpha"):
                if v[name] is not None:
                    v[name] = validate_positive(v[name], name)
            if v["beta"] is not None and v["beta"] > 1:
                raise ValueError("beta must lie in (0, 1].")
            if v["alpha"] is not None:
                if v["beta"] is None or not v["alpha"] < v["beta"]:
                    raise ValueError("alpha requires beta and must be below it.")
            if v["gammas"] is not None:
                gammas = tuple(None if g is None else float(g)
                               for g in v["gammas"])
                if len(gammas) != v["L"]:
                    msg = (f"'gammas' needs {v['L']:d} entries, one per level, "
                           f"got {len(gammas):d}.")
                    raise ValueError(msg)
                if any(g is not None and (math.isnan(g) or g <= 0)
                       for g in gammas):
                    raise ValueError("Every explicit gamma must be positive.")
                v["gammas"] = gammas
            elif v["beta"] is None:
                raise ValueError("Either 'beta' or explicit 'gammas' is needed.")
            v["constrain_root_zero"] = bool(v["constrain_root_zero"])
            v["recenter"] = bool(v["recenter"])
            v["sigma"] = validate_positive(v["sigma"], "sigma")
            v["mu_grid"] = validate_grid(v["mu_grid"], "mu_grid", minimum = 0)
            v["target_far"] = validate_probability(v["target_far"],
                                                   "target_far")
            v["trials"] = validate_count(v["trials"], "trials")
            v["calibration_trials"] = validate_count(v["calibration_trials"],
                                        "calibration_trials", minimum = 1000)
            detectors = tuple(v["detectors"])
            bad = [k for k in detectors if k not in DETECTOR_KINDS]
            if bad or not detectors:
                msg = (f"Detectors must be a non-empty subset of "
                       f"{', '.join(DETECTOR_KINDS)}; got {list(detectors)}.")
                raise ValueError(msg)
            v["detectors"] = detectors
            if v["basis_source"] not in BASIS_SOURCES:
                msg = (f"basis_source must be one of {', '.join(BASIS_SOURCES)}"
                       f", got {v['basis_source']!r}.")
                raise ValueError(msg)
            v["learn_snapshots"] = validate_count(v["learn_snapshots"],
                                                  "learn_snapshots")
            v["n_grid"] = tuple(validate_count(n, "n_grid entry")
                                for n in v["n_grid"])
            if not v["n_grid"]:
                raise ValueError("'n_grid' must not be empty.")
            v["recovery_trials"] = validate_count(v["recovery_trials"],
                                                  "recovery_trials")
            v["samples"] = validate_count(v["samples"], "samples")
            v["oracle_samples"] = validate_count(v["oracle_samples"],
                                                 "oracle_samples")
            v["delta"] = validate_probability(v["delta"], "delta")
            v["M"] = validate_positive(v["M"], "M")
        except (TypeError, ValueError, KeyError) as e:
            raise ConfigError(str(e))
        return cls(**v)

    def replace(self, **changes):
        values = asdict(self)
        values.update(changes)
        return type(self).validated(**values)

    def to_dict(self):
        data = {"schema_version": SCHEMA_VERSION}
        for key, val in asdict(self).items():
            data[key] = list(val) if isinstance(val, tuple) else val
        return data
