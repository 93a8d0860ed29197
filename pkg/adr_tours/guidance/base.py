"""
Guidance law interface and the Lyapunov descent helper.

Classes
-------
GuidanceLaw : Abstract callable mapping (mean elements, target, weights) to a thrust direction.
LyapunovGuidance : Guidance law steering along the steepest descent of a scalar.
"""
import math
from abc import ABC, abstractmethod
from typing import Optional

import numpy as np

from ..astro.elements import ClassicalElements
from ..astro.environment import Environment
from .gve import GveMatrix, TargetState, ThrustDirection, gve_matrix

FD_RELATIVE_STEP = 1e-6
# absolute floors of the step for (a [km], e, i [rad], RAAN [rad])
_FD_FLOORS = np.array([1.0, 1e-3, 1e-2, 1e-2])


class GuidanceLaw(ABC):
    """Thrust direction for the current mean elements."""

    name: str = ""

    @abstractmethod
    def __call__(self, el: ClassicalElements, target: TargetState, weights,
                 env: Environment, thrust_acceleration: Optional[float] = None) -> ThrustDirection:
        """
        Parameters
        ----------
        el : ClassicalElements
            Mean elements with the true anomaly of the actual position.
        target : TargetState
        weights
            Weight object of the law.
        env : Environment
        thrust_acceleration : float, optional
            Available thrust acceleration [km/s^2].

        Returns
        -------
        ThrustDirection
        """
        raise NotImplementedError

    def value(self, el: ClassicalElements, target: TargetState, weights, env: Environment,
              thrust_acceleration: Optional[float] = None) -> Optional[float]:
        """Scalar the law drives to zero, or None when it has none."""
        return None


class LyapunovGuidance(GuidanceLaw, ABC):
    """
    Steers along u = -B^T g / |g B|, g being the central-difference gradient of the law's
    scalar with respect to (a, e, i, RAAN).
    """

    @abstractmethod
    def scalar(self, x: np.ndarray, el: ClassicalElements, target: TargetState, weights,
               env: Environment, thrust_acceleration: float, context: dict) -> float:
        """Scalar at slow elements ``x`` = (a, e, i, RAAN); ``el`` supplies the fast ones."""
        raise NotImplementedError

    def context(self, el: ClassicalElements, target: TargetState, weights) -> dict:
        """Branch decisions taken once at the base point and held through differencing."""
        return {}

    def value(self, el, target, weights, env, thrust_acceleration=None):
        f = _acceleration(thrust_acceleration)
        return self.scalar(np.array([el.a, el.e, el.i, el.raan]), el, target, weights, env, f,
                           self.context(el, target, weights))

    def gradient(self, el: ClassicalElements, target: TargetState, weights, env: Environment,
                 thrust_acceleration: Optional[float] = None) -> np.ndarray:
        f = _acceleration(thrust_acceleration)
        ctx = self.context(el, target, weights)
        x0 = np.array([el.a, el.e, el.i, el.raan])
        steps = FD_RELATIVE_STEP * np.maximum(np.abs(x0), _FD_FLOORS)
        grad = np.zeros(4)
        for k in range(4):
            dx = np.zeros(4)
            dx[k] = steps[k]
            plus = self.scalar(x0 + dx, el, target, weights, env, f, ctx)
            minus = self.scalar(x0 - dx, el, target, weights, env, f, ctx)
            grad[k] = (plus - minus) / (2.0 * steps[k])
        return grad

    def __call__(self, el, target, weights, env, thrust_acceleration=None):
        b: GveMatrix = gve_matrix(el, env)
        g = self.gradient(el, target, weights, env, thrust_acceleration)
        if not np.all(np.isfinite(g)):
            return ThrustDirection.inactive()
        return ThrustDirection.from_raw(-(g @ b.matrix))


def _acceleration(value: Optional[float]) -> float:
    # direction is independent of the magnitude
    return 1e-7 if value is None or not value > 0.0 else float(value)


def raan_distance(raan: float, raan_target: float) -> float:
    """Minor-arc distance acos(cos(RAAN - RAAN_T)) in [0, pi]."""
    return math.acos(max(-1.0, min(1.0, math.cos(raan - raan_target))))
