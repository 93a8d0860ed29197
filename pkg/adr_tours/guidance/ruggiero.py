"""
Ruggiero element steering: a weighted blend of the locally optimal thrust direction of each
targeted element, gated by the element's efficiency at the current true anomaly.
"""
import math
from typing import List, Optional, Tuple

import numpy as np

from ..astro.elements import ClassicalElements, true_to_eccentric
from ..astro.environment import Environment
from .base import GuidanceLaw, raan_distance
from .gve import TargetState, ThrustDirection
from .weights import RuggieroWeights


def _sign(x: float) -> float:
    return 1.0 if x > 0.0 else (-1.0 if x < 0.0 else 0.0)


def _unit(alpha: float, beta: float) -> np.ndarray:
    return np.array([math.cos(beta) * math.sin(alpha), math.cos(beta) * math.cos(alpha),
                     math.sin(beta)])


def element_directions(el: ClassicalElements, target: TargetState, env: Environment
                       ) -> List[Tuple[np.ndarray, float]]:
    """
    Optimal direction and efficiency for a, e, i and RAAN, in that order.

    Each direction already carries the sign that moves its element toward the target; a
    zero vector means the element is on target.
    """
    a, e, nu, argp = el.a, el.e, el.nu, el.argp
    u = argp + nu
    one_e_cos = 1.0 + e * math.cos(nu)
    speed = math.sqrt(env.mu * (2.0 / el.r - 1.0 / a))

    alpha_a = math.atan(e * math.sin(nu) / one_e_cos)
    eta_a = speed * math.sqrt(a * (1.0 - e) / (env.mu * (1.0 + e)))
    t_a = _sign(target.a - a) * _unit(alpha_a, 0.0)

    ecc_anomaly = true_to_eccentric(nu, e)
    alpha_e = math.atan2(math.sin(nu), math.cos(ecc_anomaly) + math.cos(nu))
    eta_e = (1.0 + 2.0 * e * math.cos(nu) + math.cos(nu) ** 2) / one_e_cos
    t_e = _sign(target.e - e) * _unit(alpha_e, 0.0)

    beta_i = 0.5 * math.pi * _sign(math.cos(u))
    eta_i = (abs(math.cos(u)) / one_e_cos
             * (math.sqrt(1.0 - (e * math.sin(argp)) ** 2) - e * abs(math.cos(argp))))
    t_i = _sign(target.i - el.i) * _unit(0.0, beta_i)

    beta_raan = 0.5 * math.pi * _sign(math.sin(u))
    eta_raan = (abs(math.sin(u)) / one_e_cos
                * (math.sqrt(1.0 - (e * math.cos(argp)) ** 2) - e * abs(math.sin(argp))))
    t_raan = _sign(-math.sin(el.raan - target.raan)) * _unit(0.0, beta_raan)
    if beta_raan == 0.0:
        t_raan = np.zeros(3)
    if beta_i == 0.0:
        t_i = np.zeros(3)

    return [(t_a, eta_a), (t_e, eta_e), (t_i, eta_i), (t_raan, eta_raan)]


class RuggieroGuidance(GuidanceLaw):
    """u = sum_X |X - X_T| W_X T_X / |...| over the elements whose efficiency passes its gate."""

    name = "ruggiero"

    def __call__(self, el: ClassicalElements, target: TargetState, weights: RuggieroWeights,
                 env: Environment, thrust_acceleration: Optional[float] = None) -> ThrustDirection:
        distances = (abs(el.a - target.a), abs(el.e - target.e), abs(el.i - target.i),
                     raan_distance(el.raan, target.raan))
        blend = np.zeros(3)
        for (direction, eta), distance, w, gate in zip(
                element_directions(el, target, env), distances, weights.as_array(),
                weights.thresholds):
            if eta > gate:
                blend += distance * w * direction
        return ThrustDirection.from_raw(blend)


ruggiero = RuggieroGuidance()


def ruggiero_direction(el: ClassicalElements, target: TargetState, weights: RuggieroWeights,
                       env: Environment) -> ThrustDirection:
    return ruggiero(el, target, weights, env)
