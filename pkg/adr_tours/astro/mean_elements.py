"""
First-order J2 mapping between mean and osculating elements.

The map keeps the short-periodic terms of the Brouwer-Lyddane first-order theory (as
written in Schaub and Junkins, Analytical Mechanics of Space Systems, appendix F) and
drops the long-period terms carrying the 1/(1 - 5 cos^2 i) factor, so it is regular at the
critical inclination. The results are assembled through the nonsingular intermediates
(e sin M, e cos M) and (sin(i/2) sin Omega, sin(i/2) cos Omega), which keeps circular and
equatorial orbits well defined. The inverse map is a fixed-point iteration on
equinoctial-like variables.
"""
import logging
import math

import numpy as np

from .elements import SINGULAR_TOL, ClassicalElements, mean_to_true, true_to_mean, wrap_pi
from .environment import Environment

logger = logging.getLogger(__name__)

MEAN_ELEMENT_ECCENTRICITY_LIMIT = 0.1
_MAX_ITERATIONS = 12
_TOLERANCE = 1e-12


def _short_periodic_map(el: ClassicalElements, req: float, j2: float, sign: float):
    a, e, i = el.a, el.e, el.i
    raan, argp, f = el.raan, el.argp, el.nu
    mean_anomaly = true_to_mean(f, e)
    gamma2 = sign * 0.5 * j2 * (req / a) ** 2
    eta = math.sqrt(1.0 - e * e)
    gamma2p = gamma2 / eta ** 4
    a_r = (1.0 + e * math.cos(f)) / eta ** 2
    ci = math.cos(i)
    ci2 = ci * ci
    si = math.sqrt(max(0.0, 1.0 - ci2))
    cf = math.cos(f)
    two_w = 2.0 * argp
    center = f - mean_anomaly + e * math.sin(f)
    s_3 = (3.0 * math.sin(two_w + 2.0 * f) + 3.0 * e * math.sin(two_w + f)
           + e * math.sin(two_w + 3.0 * f))

    a_new = a + a * gamma2 * ((3.0 * ci2 - 1.0) * (a_r ** 3 - 1.0 / eta ** 3)
                              + 3.0 * (1.0 - ci2) * a_r ** 3 * math.cos(two_w + 2.0 * f))
    cubic = 3.0 * cf + 3.0 * e * cf * cf + e * e * cf ** 3
    de = 0.5 * eta ** 2 * (
        gamma2 * ((3.0 * ci2 - 1.0) / eta ** 6 * (e * eta + e / (1.0 + eta) + cubic)
                  + 3.0 * (1.0 - ci2) / eta ** 6 * (e + cubic) * math.cos(two_w + 2.0 * f))
        - gamma2p * (1.0 - ci2) * (3.0 * math.cos(two_w + f) + math.cos(two_w + 3.0 * f)))
    di = 0.5 * gamma2p * ci * si * (3.0 * math.cos(two_w + 2.0 * f)
                                    + 3.0 * e * math.cos(two_w + f)
                                    + e * math.cos(two_w + 3.0 * f))
    longitude = (mean_anomaly + argp + raan
                 + 0.25 * gamma2p * (-6.0 * (1.0 - 5.0 * ci2) * center + (3.0 - 5.0 * ci2) * s_3)
                 - 0.5 * gamma2p * ci * (6.0 * center - s_3))
    e_dm = -0.25 * gamma2p * eta ** 3 * (
        2.0 * (3.0 * ci2 - 1.0) * ((a_r * eta) ** 2 + a_r + 1.0) * math.sin(f)
        + 3.0 * (1.0 - ci2) * ((-(a_r * eta) ** 2 - a_r + 1.0) * math.sin(two_w + f)
                               + ((a_r * eta) ** 2 + a_r + 1.0 / 3.0) * math.sin(two_w + 3.0 * f)))
    d_raan = -0.5 * gamma2p * ci * (6.0 * center - s_3)

    d1 = (e + de) * math.sin(mean_anomaly) + e_dm * math.cos(mean_anomaly)
    d2 = (e + de) * math.cos(mean_anomaly) - e_dm * math.sin(mean_anomaly)
    s_half, c_half = math.sin(0.5 * i), math.cos(0.5 * i)
    d3 = (s_half + c_half * di / 2.0) * math.sin(raan) + s_half * d_raan * math.cos(raan)
    d4 = (s_half + c_half * di / 2.0) * math.cos(raan) - s_half * d_raan * math.sin(raan)
    return a_new, d1, d2, d3, d4, longitude


def _assemble(a, d1, d2, d3, d4, longitude, epoch) -> ClassicalElements:
    e = math.hypot(d1, d2)
    sin_half = min(1.0, math.hypot(d3, d4))
    i = 2.0 * math.asin(sin_half)
    raan = math.atan2(d3, d4) if sin_half > SINGULAR_TOL else 0.0
    if e > SINGULAR_TOL:
        mean_anomaly = math.atan2(d1, d2)
        argp = longitude - mean_anomaly - raan
        nu = mean_to_true(mean_anomaly, e)
    else:
        e = 0.0
        argp = 0.0
        nu = longitude - raan
    return ClassicalElements(a=a, e=e, i=min(i, math.pi), raan=raan, argp=argp, nu=nu,
                             epoch=epoch)


def _nonsingular(el: ClassicalElements) -> np.ndarray:
    lon_peri = el.raan + el.argp
    s_half = math.sin(0.5 * el.i)
    return np.array([el.a, el.e * math.cos(lon_peri), el.e * math.sin(lon_peri),
                     s_half * math.cos(el.raan), s_half * math.sin(el.raan),
                     lon_peri + true_to_mean(el.nu, el.e)])


def _from_nonsingular(x: np.ndarray, epoch: float) -> ClassicalElements:
    a, ex, ey, qx, qy, longitude = x
    e = math.hypot(ex, ey)
    sin_half = min(1.0, math.hypot(qx, qy))
    raan = math.atan2(qy, qx) if sin_half > SINGULAR_TOL else 0.0
    if e > SINGULAR_TOL:
        argp = math.atan2(ey, ex) - raan
        nu = mean_to_true(longitude - argp - raan, e)
    else:
        e, argp, nu = 0.0, 0.0, longitude - raan
    return ClassicalElements(a=a, e=min(e, 0.999), i=2.0 * math.asin(sin_half), raan=raan,
                             argp=argp, nu=nu, epoch=epoch)


def mean_to_osculating(el: ClassicalElements, env: Environment) -> ClassicalElements:
    """
    Add first-order J2 short-periodic variations to a mean element set.

    Parameters
    ----------
    el : ClassicalElements
        Mean elements.
    env : Environment

    Returns
    -------
    ClassicalElements
        Osculating elements at the same epoch.
    """
    if env.j2 == 0.0:
        return el
    return _assemble(*_short_periodic_map(el, env.re, env.j2, 1.0), el.epoch)


def osculating_to_mean(el: ClassicalElements, env: Environment) -> ClassicalElements:
    """
    Remove first-order J2 short-periodic variations.

    The first guess applies the map with reversed sign; the guess is then corrected until
    mapping it back reproduces the osculating input. Eccentricities at or above 0.1 are
    converted but logged, since the map is only accurate for near-circular orbits.

    Parameters
    ----------
    el : ClassicalElements
        Osculating elements.
    env : Environment

    Returns
    -------
    ClassicalElements
        Mean elements at the same epoch.
    """
    if env.j2 == 0.0:
        return el
    if el.e >= MEAN_ELEMENT_ECCENTRICITY_LIMIT:
        logger.warning("Mean element conversion at e=%.4f is outside the near-circular "
                       "regime; accuracy is degraded", el.e)
    target = _nonsingular(el)
    mean = _assemble(*_short_periodic_map(el, env.re, env.j2, -1.0), el.epoch)
    for _ in range(_MAX_ITERATIONS):
        residual = target - _nonsingular(mean_to_osculating(mean, env))
        residual[5] = wrap_pi(residual[5])
        x = _nonsingular(mean) + residual
        mean = _from_nonsingular(x, el.epoch)
        if abs(residual[0]) < _TOLERANCE * el.a and np.max(np.abs(residual[1:])) < _TOLERANCE:
            break
    return mean
