"""
Leg fitness in simplified dynamics for weight tuning.

The model flies mean circular elements (a, i, RAAN) and mass with an RK4 step. Rates are
the Gauss equations averaged over a few points of the orbit with the law commanding each
point, at half the maximum thrust; the only natural perturbation is the secular J2
precession. There is no mean/osculating conversion, no eclipse and no drag.

Classes
-------
SimplifiedSettings : Step, orbit sampling and error scales.
"""
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from ..astro.elements import ClassicalElements, wrap_pi
from ..astro.environment import Environment, SpacecraftConfig
from ..astro.perturbations import j2_raan_rate
from ..errors import ConfigError, DegenerateOrbitError
from ..guidance import get_law
from ..guidance.gve import TargetState, gve_matrix
from ..guidance.weights import LegWeights, Weights
from ..propagator.throttle import DeadbandThresholds, ThrottleState, drift_deadband
from ..tour.solution import TourLeg

ABORT_FITNESS = 1e6


@dataclass(frozen=True)
class SimplifiedSettings:
    """
    Attributes
    ----------
    step : float
        RK4 step [s].
    orbit_samples : int
        Argument-of-latitude samples per orbit for the averaged rates.
    thrust_factor : float
        Fraction of the maximum thrust available.
    a_scale, i_scale, raan_scale : float
        Error scales [km, deg, deg] of the fitness.
    abort_altitude : float
        [km]
    """
    step: float = 86400.0
    orbit_samples: int = 8
    thrust_factor: float = 0.5
    a_scale: float = 20.0
    i_scale: float = 0.1
    raan_scale: float = 1.0
    abort_altitude: float = 150.0
    deadband: DeadbandThresholds = field(default_factory=DeadbandThresholds)

    def __post_init__(self):
        if not self.step > 0.0 or self.orbit_samples < 1:
            raise ConfigError("simplified dynamics need a positive step and at least one sample")


class _Aborted(Exception):
    pass


def _rates(state: np.ndarray, t: float, target: TargetState, law, weights, sc, env,
           settings: SimplifiedSettings, thrusting: bool) -> np.ndarray:
    a, i, raan, mass = state
    if a - env.re < settings.abort_altitude or mass <= 0.0:
        raise _Aborted()
    rates = np.zeros(4)
    rates[2] = j2_raan_rate(a, 0.0, i, env)
    if not thrusting:
        return rates
    force = settings.thrust_factor * sc.max_thrust
    f = force / mass / 1000.0
    on = 0
    for k in range(settings.orbit_samples):
        u = 2.0 * math.pi * (k + 0.5) / settings.orbit_samples
        el = ClassicalElements(a=a, e=0.0, i=min(max(i, 1e-9), math.pi - 1e-9), raan=raan,
                               argp=0.0, nu=u, epoch=t)
        command = law(el, target, weights, env, f)
        if not command.active:
            continue
        on += 1
        b = gve_matrix(el, env).matrix
        slow = b @ (f * command.vector)
        rates[0] += slow[0]
        rates[1] += slow[2]
        rates[2] += slow[3]
    rates[:3] /= settings.orbit_samples
    rates[3] = -force * on / settings.orbit_samples / (sc.exhaust_velocity(env.g0) * 1000.0)
    return rates


def simplified_leg_fitness(weights: Weights, leg: TourLeg, law: str, sc: SpacecraftConfig,
                           env: Environment, settings: Optional[SimplifiedSettings] = None
                           ) -> float:
    """
    Accumulated terminal error of a leg flown in simplified dynamics.

    Returns
    -------
    float
        |da|/a_scale + |di|/i_scale + |dRAAN|/raan_scale at the end of the leg, or a large
        constant when the leg aborts.
    """
    s = settings or SimplifiedSettings()
    guidance = get_law(law)
    first = leg.segments[0].start()
    state = np.array([first.a, first.i, first.raan, leg.mass_start + leg.carried_mass])
    dry = sc.dry_mass + leg.carried_mass
    try:
        for segment in leg.segments:
            t, t_end = segment.start_epoch, segment.end_epoch
            deadband = ThrottleState.OFF
            while t < t_end - 1e-6:
                h = min(s.step, t_end - t)
                sample = segment.sample(t)
                # aim at where the reference will be at the end of the step
                target = TargetState.from_sample(segment.sample(t + h))
                thrusting = True
                if segment.kind != "thrust":
                    mean = ClassicalElements(a=state[0], e=0.0, i=state[1], raan=state[2],
                                             argp=0.0, nu=0.0, epoch=t)
                    deadband = drift_deadband(mean, sample.a, sample.i, sample.raan, deadband,
                                              s.deadband)
                    thrusting = deadband is ThrottleState.ON

                def rhs(y, tau):
                    return _rates(y, tau, target, guidance, weights, sc, env, s, thrusting)

                k1 = rhs(state, t)
                k2 = rhs(state + 0.5 * h * k1, t + 0.5 * h)
                k3 = rhs(state + 0.5 * h * k2, t + 0.5 * h)
                k4 = rhs(state + h * k3, t + h)
                state = state + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
                t += h
                if state[3] < dry:
                    raise _Aborted()
    except (_Aborted, DegenerateOrbitError):
        return ABORT_FITNESS
    end = leg.segments[-1].end()
    da = abs(state[0] - end.a)
    di = abs(math.degrees(state[1] - end.i))
    draan = abs(math.degrees(float(wrap_pi(state[2] - end.raan))))
    return da / s.a_scale + di / s.i_scale + draan / s.raan_scale


def legs_fitness(weights: LegWeights, legs: Sequence[TourLeg], law: str, sc: SpacecraftConfig,
                 env: Environment, settings: Optional[SimplifiedSettings] = None) -> float:
    """Sum of the simplified fitness over transfer legs, each with its direction's weights."""
    return sum(simplified_leg_fitness(weights.for_leg(leg.kind), leg, law, sc, env, settings)
               for leg in legs if leg.is_transfer)
