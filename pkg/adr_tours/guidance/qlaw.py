"""
Q-law: weighted sum of squared best-case times-to-go of each element.

The maximum rates over the osculating orbit, the semi-major-axis scaling and the
periapsis penalty take their usual closed forms.
"""
import math
from typing import Optional

import numpy as np

from ..astro.elements import ClassicalElements
from ..astro.environment import Environment
from .base import LyapunovGuidance, raan_distance
from .gve import TargetState, ThrustDirection
from .weights import QLawWeights

SCALE_M = 3.0
SCALE_N = 4.0
SCALE_R = 2.0


def max_rates(a: float, e: float, i: float, argp: float, f: float, env: Environment):
    """Largest |da/dt|, |de/dt|, |di/dt|, |dRAAN/dt| over the orbit for acceleration ``f``."""
    p = a * (1.0 - e * e)
    h = math.sqrt(env.mu * p)
    a_dot = 2.0 * f * math.sqrt(a ** 3 * (1.0 + e) / (env.mu * (1.0 - e)))
    e_dot = 2.0 * p * f / h
    i_den = math.sqrt(1.0 - (e * math.sin(argp)) ** 2) - abs(e * math.cos(argp))
    i_dot = p * f / (h * i_den)
    sin_i = abs(math.sin(i))
    raan_den = sin_i * (math.sqrt(1.0 - (e * math.cos(argp)) ** 2) - abs(e * math.sin(argp)))
    raan_dot = math.inf if raan_den <= 0.0 else p * f / (h * raan_den)
    return a_dot, e_dot, i_dot, raan_dot


def qlaw_scalar(a: float, e: float, i: float, raan: float, argp: float, target: TargetState,
                w: QLawWeights, f: float, env: Environment) -> float:
    """Q [s^2] at the given slow elements."""
    a_dot, e_dot, i_dot, raan_dot = max_rates(a, e, i, argp, f, env)
    s_a = (1.0 + ((a - target.a) / (SCALE_M * target.a)) ** SCALE_N) ** (1.0 / SCALE_R)
    q = s_a * w.w_a * ((a - target.a) / a_dot) ** 2
    q += w.w_e * ((e - target.e) / e_dot) ** 2
    q += w.w_i * ((i - target.i) / i_dot) ** 2
    if math.isfinite(raan_dot):
        q += w.w_raan * (raan_distance(raan, target.raan) / raan_dot) ** 2
    if w.w_p > 0.0:
        rp = a * (1.0 - e)
        q *= 1.0 + w.w_p * math.exp(w.k_p * (1.0 - rp / w.rp_min))
    return q


class QLawGuidance(LyapunovGuidance):
    """Steepest descent of Q."""

    name = "qlaw"

    def scalar(self, x: np.ndarray, el: ClassicalElements, target: TargetState,
               weights: QLawWeights, env: Environment, thrust_acceleration: float,
               context: dict) -> float:
        return qlaw_scalar(x[0], x[1], x[2], x[3], el.argp, target, weights,
                           thrust_acceleration, env)


qlaw = QLawGuidance()


def qlaw_value(el: ClassicalElements, target: TargetState, weights: QLawWeights,
               env: Environment, thrust_acceleration: Optional[float] = None) -> float:
    return qlaw.value(el, target, weights, env, thrust_acceleration)


def qlaw_direction(el: ClassicalElements, target: TargetState, weights: QLawWeights,
                   env: Environment, thrust_acceleration: Optional[float] = None
                   ) -> ThrustDirection:
    return qlaw(el, target, weights, env, thrust_acceleration)
