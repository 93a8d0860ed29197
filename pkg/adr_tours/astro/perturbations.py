"""
Perturbing accelerations and secular rates: J2 oblateness and atmospheric drag.

Drag uses the inertial velocity (no co-rotating atmosphere) and the density of
:class:`~adr_tours.astro.environment.Environment`.
"""
import math

import numpy as np

from .elements import CartesianState
from .environment import Environment, SpacecraftConfig


def j2_raan_rate(a: float, e: float, i: float, env: Environment) -> float:
    """
    Secular nodal precession rate of a circular orbit.

    Parameters
    ----------
    a : float
        Semi-major axis [km].
    e : float
        Eccentricity; accepted for signature symmetry, the circular form ignores it.
    i : float
        Inclination [rad].
    env : Environment

    Returns
    -------
    float
        dOmega/dt [rad/s].
    """
    del e
    n = math.sqrt(env.mu / a ** 3)
    return -1.5 * env.j2 * n * (env.re / a) ** 2 * math.cos(i)


def j2_acceleration(state: CartesianState, env: Environment) -> np.ndarray:
    """First zonal harmonic acceleration in the inertial frame [km/s^2]."""
    x, y, z = state.position
    r2 = x * x + y * y + z * z
    r = math.sqrt(r2)
    factor = -1.5 * env.j2 * env.mu * env.re ** 2 / r ** 5
    z2_r2 = z * z / r2
    return factor * np.array([x * (1.0 - 5.0 * z2_r2),
                              y * (1.0 - 5.0 * z2_r2),
                              z * (3.0 - 5.0 * z2_r2)])


def atmospheric_density(altitude: float, env: Environment) -> float:
    """Density [kg/m^3] at ``altitude`` [km]; raises ``AltitudeRangeError`` outside the table."""
    return env.density(altitude)


def drag_magnitude(altitude: float, speed: float, area_coefficient: float, mass: float,
                   env: Environment) -> float:
    """
    Drag deceleration magnitude 0.5*rho*Cd*A*v^2/m.

    Parameters
    ----------
    altitude : float
        [km]
    speed : float
        Speed relative to the atmosphere [km/s].
    area_coefficient : float
        Cd*A [m^2].
    mass : float
        [kg]
    env : Environment

    Returns
    -------
    float
        Deceleration [km/s^2].
    """
    rho = env.density(altitude)
    speed_m = speed * 1000.0
    return 0.5 * rho * area_coefficient * speed_m * speed_m / mass / 1000.0


def drag_acceleration(state: CartesianState, mass: float, sc: SpacecraftConfig,
                      env: Environment) -> np.ndarray:
    """
    Drag acceleration opposing the inertial velocity [km/s^2].

    Raises
    ------
    AltitudeRangeError
        When the altitude leaves the atmosphere table.
    """
    speed = state.speed
    magnitude = drag_magnitude(state.radius - env.re, speed, sc.ballistic_coefficient(),
                               mass, env)
    if magnitude == 0.0 or speed == 0.0:
        return np.zeros(3)
    return -magnitude * state.velocity / speed


def circular_drag_decay_rate(a: float, area_coefficient: float, mass: float,
                             env: Environment) -> float:
    """da/dt [km/s] of a circular orbit from the Gauss tangential rate 2a^2 v/mu * |a_drag|."""
    v = env.circular_speed(a)
    return -2.0 * a * a * v / env.mu * drag_magnitude(a - env.re, v, area_coefficient, mass, env)
