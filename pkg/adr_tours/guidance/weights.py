"""
Guidance weights and their per-direction tables.

Classes
-------
RuggieroWeights : W_a, W_e, W_i, W_RAAN and the efficiency thresholds.
DvLawWeights : lambda coefficients of the delta-v law.
QLawWeights : Q-law element weights and periapsis penalty settings.
LegWeights : Weights for downward (deorbit) and upward (rendezvous) legs of one law.

Each weight class maps to and from the five-slot vector tuned by the swarm; Ruggiero and
Q-law use (W_a, W_e, W_i, W_RAAN, unused) and the delta-v law uses
(lambda_e1, lambda_e2, lambda_ai, lambda_ei, lambda_araan).
"""
from dataclasses import dataclass, fields
from typing import Any, Dict, Sequence, Tuple, Union

import numpy as np

from ..errors import ConfigError

LAWS = ("ruggiero", "dvlaw", "qlaw")
VECTOR_SIZE = 5
# slots held at zero while tuning: the eccentricity weight and the unused fifth slot
PINNED_SLOTS = {"ruggiero": (1, 4), "dvlaw": (), "qlaw": (1, 4)}


def _check_non_negative(obj) -> None:
    for f in fields(obj):
        value = getattr(obj, f.name)
        if isinstance(value, tuple):
            if any(v < 0.0 for v in value):
                raise ConfigError(f"{type(obj).__name__}.{f.name} must be non-negative")
        elif value is not None and value < 0.0:
            raise ConfigError(f"{type(obj).__name__}.{f.name} must be non-negative")


def _vector(values: Sequence[float]) -> np.ndarray:
    v = np.asarray(values, dtype=float)
    if v.shape != (VECTOR_SIZE,):
        raise ConfigError(f"weight vector must have {VECTOR_SIZE} entries, got {v.size}")
    return v


@dataclass(frozen=True)
class RuggieroWeights:
    """
    Attributes
    ----------
    w_a, w_e, w_i, w_raan : float
        Element weights.
    thresholds : tuple of float
        Efficiency thresholds (a, e, i, RAAN) in [0, 1); an element steers only while its
        efficiency exceeds the threshold.
    """
    w_a: float = 1.0
    w_e: float = 0.0
    w_i: float = 1.0
    w_raan: float = 1.0
    thresholds: Tuple[float, float, float, float] = (0.0, 0.0, 0.0, 0.0)

    def __post_init__(self):
        object.__setattr__(self, "thresholds", tuple(float(t) for t in self.thresholds))
        _check_non_negative(self)
        if len(self.thresholds) != 4 or any(t >= 1.0 for t in self.thresholds):
            raise ConfigError("Ruggiero thresholds must be four values in [0, 1)")

    def as_array(self) -> np.ndarray:
        return np.array([self.w_a, self.w_e, self.w_i, self.w_raan])

    def to_vector(self) -> np.ndarray:
        return np.array([self.w_a, self.w_e, self.w_i, self.w_raan, 0.0])

    @classmethod
    def from_vector(cls, values: Sequence[float]) -> "RuggieroWeights":
        v = _vector(values)
        return cls(v[0], v[1], v[2], v[3])

    def scaled(self, factor: float) -> "RuggieroWeights":
        return RuggieroWeights(self.w_a * factor, self.w_e * factor, self.w_i * factor,
                               self.w_raan * factor, self.thresholds)


@dataclass(frozen=True)
class DvLawWeights:
    """
    Attributes
    ----------
    lambda_e1, lambda_e2 : float
        Eccentricity-term weight and speed blend.
    lambda_ai, lambda_ei : float
        Inclination weights in the plane-change angle and in the yaw term.
    lambda_araan : float
        RAAN weight in the plane-change angle.
    lambda_omega : float
        Argument-of-periapsis factor; not tuned.
    lambda_a : float
        Semi-major-axis weight; held at 1.
    """
    lambda_e1: float = 0.1
    lambda_e2: float = 0.5
    lambda_ai: float = 1.0
    lambda_ei: float = 0.5
    lambda_araan: float = 0.01
    lambda_omega: float = 0.0
    lambda_a: float = 1.0

    def __post_init__(self):
        _check_non_negative(self)

    def to_vector(self) -> np.ndarray:
        return np.array([self.lambda_e1, self.lambda_e2, self.lambda_ai, self.lambda_ei,
                         self.lambda_araan])

    @classmethod
    def from_vector(cls, values: Sequence[float], lambda_omega: float = 0.0) -> "DvLawWeights":
        v = _vector(values)
        return cls(v[0], v[1], v[2], v[3], v[4], lambda_omega)

    def scaled(self, factor: float) -> "DvLawWeights":
        return DvLawWeights(self.lambda_e1 * factor, self.lambda_e2, self.lambda_ai,
                            self.lambda_ei, self.lambda_araan, self.lambda_omega,
                            self.lambda_a * factor)


@dataclass(frozen=True)
class QLawWeights:
    """
    Attributes
    ----------
    w_a, w_e, w_i, w_raan : float
        Element weights.
    w_p : float
        Periapsis penalty weight; 0 disables the penalty.
    rp_min : float
        Minimum periapsis radius [km] of the penalty.
    k_p : float
        Penalty steepness.
    """
    w_a: float = 1.0
    w_e: float = 0.0
    w_i: float = 1.0
    w_raan: float = 1.0
    w_p: float = 0.0
    rp_min: float = 6578.137
    k_p: float = 100.0

    def __post_init__(self):
        _check_non_negative(self)

    def as_array(self) -> np.ndarray:
        return np.array([self.w_a, self.w_e, self.w_i, self.w_raan])

    def to_vector(self) -> np.ndarray:
        return np.array([self.w_a, self.w_e, self.w_i, self.w_raan, 0.0])

    @classmethod
    def from_vector(cls, values: Sequence[float]) -> "QLawWeights":
        v = _vector(values)
        return cls(v[0], v[1], v[2], v[3])

    def scaled(self, factor: float) -> "QLawWeights":
        return QLawWeights(self.w_a * factor, self.w_e * factor, self.w_i * factor,
                           self.w_raan * factor, self.w_p, self.rp_min, self.k_p)


Weights = Union[RuggieroWeights, DvLawWeights, QLawWeights]
_WEIGHT_CLASSES = {"ruggiero": RuggieroWeights, "dvlaw": DvLawWeights, "qlaw": QLawWeights}


def weights_class(law: str):
    try:
        return _WEIGHT_CLASSES[law]
    except KeyError:
        raise ConfigError(f"unknown guidance law {law!r}; expected one of {LAWS}") from None


def weights_from_vector(law: str, values: Sequence[float]) -> Weights:
    return weights_class(law).from_vector(values)


@dataclass(frozen=True)
class LegWeights:
    """Weights of one law for downward and upward legs."""
    law: str
    down: Weights
    up: Weights

    def for_leg(self, kind: str) -> Weights:
        """``deorbit`` and ``handover`` legs go down; the rest go up."""
        return self.down if kind in ("deorbit", "handover") else self.up

    def to_dict(self) -> Dict[str, Any]:
        return {"down": self.down.to_vector().tolist(), "up": self.up.to_vector().tolist()}

    @classmethod
    def from_dict(cls, law: str, data: Dict[str, Any]) -> "LegWeights":
        try:
            return cls(law, weights_from_vector(law, data["down"]),
                       weights_from_vector(law, data["up"]))
        except KeyError as exc:
            raise ConfigError(f"guidance.weights.{law} is missing {exc}") from exc

    def table(self, leg_kinds: Sequence[str]):
        """Per-leg rows (leg number, vector) for the transfer legs of a tour."""
        return [(n + 1, self.for_leg(kind).to_vector()) for n, kind in enumerate(leg_kinds)]


# swarm-tuned coefficients of the exemplar tours, (down, up) per objective and law
DEFAULT_WEIGHTS: Dict[str, Dict[str, Tuple[Sequence[float], Sequence[float]]]] = {
    "fuel": {
        "ruggiero": ((0.2058, 0.0, 0.0, 0.0, 0.0), (0.8622, 0.0, 1.0, 0.0, 0.0)),
        "dvlaw": ((0.0341, 0.9595, 0.7910, 0.0, 0.00068),
                  (0.1260, 0.04625, 0.5969, 0.8367, 0.01846)),
        "qlaw": ((1.0, 0.0, 0.8479, 0.0, 0.0), (0.6934, 0.0, 0.5649, 0.0, 0.0)),
    },
    "time": {
        "ruggiero": ((0.2058, 0.0, 0.0, 0.0, 0.0), (0.9564, 0.0, 0.1211, 0.00985, 0.0)),
        "dvlaw": ((0.0169, 0.9431, 0.9998, 0.9010, 0.00329),
                  (0.2312, 0.4254, 1.0, 0.1943, 0.0724)),
        "qlaw": ((0.8784, 0.0, 0.9156, 0.0001773, 0.0), (1.0, 0.0, 0.04448, 0.009775, 0.0)),
    },
}


def default_weights(law: str, objective: str = "fuel") -> LegWeights:
    try:
        down, up = DEFAULT_WEIGHTS[objective][law]
    except KeyError:
        raise ConfigError(f"no default weights for law {law!r} and objective {objective!r}") from None
    return LegWeights(law, weights_from_vector(law, down), weights_from_vector(law, up))
