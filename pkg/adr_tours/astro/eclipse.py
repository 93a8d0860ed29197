"""
Sun direction and cylindrical Earth-shadow geometry for circular orbits.

The solar direction is the low-precision almanac series (mean longitude and mean anomaly
of the Sun, equation of centre to second order, mean obliquity), good to about 0.01 deg.
"""
import math
from typing import Optional

import numpy as np

from .elements import ClassicalElements, wrap_2pi
from .environment import Environment
from .epochs import SECONDS_PER_DAY


def sun_direction(epoch: float) -> np.ndarray:
    """
    Unit vector from the Earth to the Sun in the mean equatorial inertial frame.

    Parameters
    ----------
    epoch : float
        Seconds since J2000.

    Returns
    -------
    np.ndarray
    """
    n = epoch / SECONDS_PER_DAY
    mean_longitude = math.radians(280.460 + 0.9856474 * n)
    mean_anomaly = math.radians(357.528 + 0.9856003 * n)
    ecliptic_longitude = (mean_longitude + math.radians(1.915) * math.sin(mean_anomaly)
                          + math.radians(0.020) * math.sin(2.0 * mean_anomaly))
    obliquity = math.radians(23.439 - 4.0e-7 * n)
    cos_l = math.cos(ecliptic_longitude)
    sin_l = math.sin(ecliptic_longitude)
    return np.array([cos_l, math.cos(obliquity) * sin_l, math.sin(obliquity) * sin_l])


def _orbit_plane_geometry(i: float, raan: float, epoch: float, sun=None):
    """Sun elevation above the orbit plane and the in-plane argument of latitude of the Sun."""
    s = sun_direction(epoch) if sun is None else np.asarray(sun, dtype=float)
    s = s / np.linalg.norm(s)
    cos_o, sin_o = math.cos(raan), math.sin(raan)
    cos_i, sin_i = math.cos(i), math.sin(i)
    p_hat = np.array([cos_o, sin_o, 0.0])
    q_hat = np.array([-sin_o * cos_i, cos_o * cos_i, sin_i])
    h_hat = np.array([sin_o * sin_i, -cos_o * sin_i, cos_i])
    beta = math.asin(max(-1.0, min(1.0, float(np.dot(s, h_hat)))))
    theta_sun = math.atan2(float(np.dot(s, q_hat)), float(np.dot(s, p_hat)))
    return beta, theta_sun


def _shadow_half_angle(a: float, beta: float, env: Environment) -> Optional[float]:
    cos_beta = math.cos(beta)
    if a <= env.re:
        return math.pi
    if cos_beta <= 0.0:
        return None
    c_star = math.sqrt(1.0 - (env.re / a) ** 2) / cos_beta
    if c_star >= 1.0:
        return None
    return math.acos(c_star)


def sunlit_fraction(a: float, i: float, raan: float, epoch: float, env: Environment,
                    sun: Optional[np.ndarray] = None) -> float:
    """
    Fraction of a circular orbit outside the cylindrical umbra.

    Parameters
    ----------
    a : float
        Orbit radius [km].
    i, raan : float
        Orbit plane orientation [rad].
    epoch : float
        Seconds since J2000, fixes the Sun direction.
    env : Environment
    sun : np.ndarray, optional
        Sun direction overriding the ephemeris.

    Returns
    -------
    float
        Value in [0, 1]; exactly 1 when the orbit never enters the shadow.
    """
    beta, _ = _orbit_plane_geometry(i, raan, epoch, sun)
    half_angle = _shadow_half_angle(a, beta, env)
    if half_angle is None:
        return 1.0
    return 1.0 - half_angle / math.pi


def shadow_half_angle(el: ClassicalElements, epoch: float, env: Environment,
                      sun: Optional[np.ndarray] = None) -> Optional[float]:
    """Half-width [rad] of the shadow arc of a circular orbit, ``None`` when full-sun."""
    beta, _ = _orbit_plane_geometry(el.i, el.raan, epoch, sun)
    return _shadow_half_angle(el.a, beta, env)


def eclipse_center_arglat(el: ClassicalElements, epoch: float, env: Environment,
                          sun: Optional[np.ndarray] = None) -> Optional[float]:
    """
    Argument of latitude of the deepest shadow point (anti-Sun direction in the plane).

    Returns
    -------
    float or None
        theta_C in [0, 2*pi), or ``None`` when the orbit is in full sun.
    """
    beta, theta_sun = _orbit_plane_geometry(el.i, el.raan, epoch, sun)
    if _shadow_half_angle(el.a, beta, env) is None:
        return None
    return wrap_2pi(theta_sun + math.pi)


def in_shadow(position: np.ndarray, epoch: float, env: Environment,
              sun: Optional[np.ndarray] = None) -> bool:
    """True when ``position`` [km] lies inside the cylindrical umbra behind the Earth."""
    s = sun_direction(epoch) if sun is None else np.asarray(sun, dtype=float)
    s = s / np.linalg.norm(s)
    r = np.asarray(position, dtype=float)
    along = float(np.dot(r, s))
    if along >= 0.0:
        return False
    return float(np.linalg.norm(r - along * s)) < env.re
