"""
Drift orbits: the coast arc of a thrust-drift-thrust RAAN-matching transfer.

Classes
-------
DriftOrbit : Circular drift orbit (speed, inclination).
"""
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..astro.elements import wrap_pi
from ..astro.environment import Environment, SpacecraftConfig
from ..astro.perturbations import drag_magnitude, j2_raan_rate
from ..edelbaum.profile import TransferProfile
from ..errors import ConfigError, DomainError, RateEqualityError

DRIFT_MIN_ALTITUDE = 200.0
DRIFT_MAX_ALTITUDE = 2000.0
_RATE_TOL = 1e-18
_MATCH_TOL = 1e-9


@dataclass(frozen=True)
class DriftOrbit:
    """
    Attributes
    ----------
    v_d : float
        Circular speed [km/s].
    i_d : float
        Inclination [rad].
    """
    v_d: float
    i_d: float

    def __post_init__(self):
        if not self.v_d > 0.0:
            raise DomainError("drift orbit speed must be positive")
        if not 0.0 <= self.i_d <= math.pi:
            raise DomainError("drift orbit inclination must be in [0, pi]")

    @classmethod
    def from_radius(cls, a: float, i: float, env: Environment) -> "DriftOrbit":
        return cls(env.circular_speed(a), i)

    def a(self, env: Environment) -> float:
        """Orbit radius mu/v_d^2 [km]."""
        return env.circular_radius(self.v_d)

    def altitude(self, env: Environment) -> float:
        return self.a(env) - env.re

    def raan_rate(self, env: Environment) -> float:
        return j2_raan_rate(self.a(env), 0.0, self.i_d, env)

    def validate(self, env: Environment,
                 inclination_bounds: Optional[Tuple[float, float]] = None) -> None:
        """
        Raises
        ------
        DomainError
            When the altitude leaves [200, 2000] km or the inclination leaves the bounds.
        """
        altitude = self.altitude(env)
        if not DRIFT_MIN_ALTITUDE <= altitude <= DRIFT_MAX_ALTITUDE:
            raise DomainError(f"drift orbit altitude {altitude:.1f} km outside "
                              f"[{DRIFT_MIN_ALTITUDE:.0f}, {DRIFT_MAX_ALTITUDE:.0f}] km")
        if inclination_bounds is not None:
            low, high = inclination_bounds
            if not low <= self.i_d <= high:
                raise DomainError(
                    f"drift orbit inclination {math.degrees(self.i_d):.3f} deg outside "
                    f"[{math.degrees(low):.3f}, {math.degrees(high):.3f}] deg")


def drift_time(raan_after_thrust: float, raan_rate_sc: float, raan_target_t0: float,
               raan_rate_target: float, tof_t1: float, tof_t2: float) -> float:
    """
    Smallest non-negative drift duration that lets the RAAN gap close.

    Solves raan_after_thrust + raan_rate_sc * T
    = raan_target_t0 + raan_rate_target * (T + tof_t1 + tof_t2)  (mod 2*pi), drifting in
    the direction of the natural relative precession.

    Parameters
    ----------
    raan_after_thrust : float
        Servicer RAAN at the start of the first thrust phase plus the precession of both
        thrust phases [rad].
    raan_rate_sc : float
        Servicer precession rate on the drift orbit [rad/s].
    raan_target_t0 : float
        Target RAAN at the start of the first thrust phase [rad].
    raan_rate_target : float
        Target precession rate [rad/s].
    tof_t1, tof_t2 : float
        Durations of the two thrust phases [s].

    Returns
    -------
    float
        Drift duration [s].

    Raises
    ------
    RateEqualityError
        When both rates are equal and the RAANs do not already match.
    """
    deficit = raan_target_t0 + raan_rate_target * (tof_t1 + tof_t2) - raan_after_thrust
    relative_rate = raan_rate_sc - raan_rate_target
    if abs(relative_rate) < _RATE_TOL:
        if abs(wrap_pi(deficit)) < _MATCH_TOL:
            return 0.0
        raise RateEqualityError("servicer and target precess at the same rate; "
                                f"RAAN gap of {math.degrees(wrap_pi(deficit)):.4f} deg cannot close")
    if relative_rate > 0.0:
        gap = math.fmod(deficit, 2.0 * math.pi)
        gap = gap + 2.0 * math.pi if gap < 0.0 else gap
    else:
        gap = math.fmod(-deficit, 2.0 * math.pi)
        gap = gap + 2.0 * math.pi if gap < 0.0 else gap
    if 2.0 * math.pi - gap < _MATCH_TOL:
        gap = 0.0
    return gap / abs(relative_rate)


def drag_force(orbit: DriftOrbit, area_coefficient: float, env: Environment) -> float:
    """Drag force [N] on a circular orbit for a stack with drag area Cd*A [m^2]."""
    # drag_magnitude with unit mass returns km/s^2 per kg
    return drag_magnitude(orbit.altitude(env), orbit.v_d, area_coefficient, 1.0, env) * 1000.0


def drift_station_keeping_dv(orbit: DriftOrbit, duration: float, sc: SpacecraftConfig,
                             env: Environment, *, mass0: Optional[float] = None,
                             area_coefficient: Optional[float] = None) -> float:
    """
    Delta-v [km/s] spent holding a drift orbit against drag for ``duration`` seconds.

    Thrust equals drag; the drag force is constant on the circular orbit while the mass
    decreases at D/c, so dv = c ln(m0 / (m0 - D T / c)).

    Raises
    ------
    DomainError
        If the duration is negative or the propellant would exceed the mass.
    """
    if duration < 0.0:
        raise DomainError("drift duration must be non-negative")
    if duration == 0.0:
        return 0.0
    mass = sc.wet_mass if mass0 is None else mass0
    cd_a = sc.ballistic_coefficient() if area_coefficient is None else area_coefficient
    force = drag_force(orbit, cd_a, env)
    if force == 0.0:
        return 0.0
    c = sc.exhaust_velocity(env.g0) * 1000.0
    spent = force * duration / c
    if spent >= mass:
        raise DomainError("station keeping would consume the whole spacecraft mass")
    return c * math.log(mass / (mass - spent)) / 1000.0


def drift_profile(orbit: DriftOrbit, start_epoch: float, duration: float, raan0: float,
                  sc: SpacecraftConfig, env: Environment, *, mass0: float, dv0: float = 0.0,
                  area_coefficient: Optional[float] = None, n_samples: int = 200,
                  kind: str = "drift") -> TransferProfile:
    """
    Reference profile of a drift (or dwell) arc: constant a and i, RAAN advancing at the J2
    rate, mass and delta-v following the drag offset.

    Returns
    -------
    TransferProfile
        ``w`` holds the thrust fraction drag/T_max needed to hold the orbit.
    """
    a = orbit.a(env)
    if duration <= 0.0:
        return TransferProfile([start_epoch], [a], [orbit.i_d], [raan0], [dv0], [mass0], [0.0],
                               [0.0], kind=kind)
    if n_samples < 2:
        raise ConfigError("a drift profile needs at least two samples")
    cd_a = sc.ballistic_coefficient() if area_coefficient is None else area_coefficient
    force = drag_force(orbit, cd_a, env)
    c = sc.exhaust_velocity(env.g0) * 1000.0
    tau = np.linspace(0.0, duration, n_samples)
    mass = mass0 - force * tau / c
    if mass[-1] <= 0.0:
        raise DomainError("station keeping would consume the whole spacecraft mass")
    dv = c * np.log(mass0 / mass) / 1000.0
    n = tau.size
    return TransferProfile(
        t=start_epoch + tau, a=np.full(n, a), i=np.full(n, orbit.i_d),
        raan=raan0 + orbit.raan_rate(env) * tau, dv_cum=dv0 + dv, mass=mass,
        beta=np.zeros(n), w=np.full(n, min(1.0, force / sc.max_thrust)), kind=kind)
