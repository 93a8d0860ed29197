"""
Delta-v law: a Lyapunov function built from the Edelbaum delta-v still needed to reach the
target circular speed and plane, plus an eccentricity term.
"""
import math
from typing import Optional

import numpy as np

from ..astro.elements import ClassicalElements
from ..astro.environment import Environment
from .base import LyapunovGuidance, raan_distance
from .gve import TargetState, ThrustDirection
from .weights import DvLawWeights

CIRCULAR_E_GAP = 1e-4
CIRCULAR_E = 1e-3


def is_circular_pair(e: float, e_target: float) -> bool:
    """Both orbits circular enough for the eccentricity term to vanish."""
    return abs(e - e_target) < CIRCULAR_E_GAP and e < CIRCULAR_E


def _eccentricity_term(vc: float, vcf: float, e: float, i: float, argp: float,
                       target: TargetState, w: DvLawWeights) -> float:
    numerator = (((1.0 - w.lambda_e2) * vc + w.lambda_e2 * vcf)
                 * (math.asin(e) - math.asin(target.e)))
    if numerator == 0.0:
        return 0.0
    log_gap = math.log((1.0 + target.e) * (1.0 - e) / ((1.0 - target.e) * (1.0 + e)))
    denominator = 4.0 * math.cos(w.lambda_omega * argp) * (log_gap - (e - target.e))
    plane = 3.0 * math.pi * w.lambda_ei * (i - target.i)
    if denominator == 0.0:
        return math.inf if plane != 0.0 else numerator ** 2
    # 1/cos^2(beta) = 1 + tan^2(beta)
    return numerator ** 2 * (1.0 + (plane / denominator) ** 2)


def dvlaw_scalar(a: float, e: float, i: float, raan: float, argp: float, target: TargetState,
                 w: DvLawWeights, env: Environment, circular: bool = False) -> float:
    """L [km^2/s^2] at the given slow elements."""
    vc = math.sqrt(env.mu / a)
    vcf = math.sqrt(env.mu / target.a)
    d_sigma = math.hypot(w.lambda_ai * (i - target.i),
                         w.lambda_araan * math.sin(i) * raan_distance(raan, target.raan))
    value = w.lambda_a * (vc * vc - 2.0 * vc * vcf * math.cos(0.5 * math.pi * d_sigma)
                          + vcf * vcf)
    if not circular and w.lambda_e1 > 0.0:
        value += 4.0 / 9.0 * w.lambda_e1 * _eccentricity_term(vc, vcf, e, i, argp, target, w)
    return value


class DvLawGuidance(LyapunovGuidance):
    """Steepest descent of the delta-v Lyapunov function."""

    name = "dvlaw"

    def context(self, el, target, weights):
        return {"circular": is_circular_pair(el.e, target.e)}

    def scalar(self, x: np.ndarray, el: ClassicalElements, target: TargetState,
               weights: DvLawWeights, env: Environment, thrust_acceleration: float,
               context: dict) -> float:
        return dvlaw_scalar(x[0], x[1], x[2], x[3], el.argp, target, weights, env,
                            context.get("circular", False))


dvlaw = DvLawGuidance()


def dvlaw_value(el: ClassicalElements, target: TargetState, weights: DvLawWeights,
                env: Environment) -> float:
    return dvlaw.value(el, target, weights, env)


def dvlaw_direction(el: ClassicalElements, target: TargetState, weights: DvLawWeights,
                    env: Environment, thrust_acceleration: Optional[float] = None
                    ) -> ThrustDirection:
    return dvlaw(el, target, weights, env, thrust_acceleration)
