"""
Classical orbital elements, Cartesian states and the conversions between them.

Angles are radians, distances km, speeds km/s, epochs seconds since the J2000 reference.
Undefined angles of circular or equatorial orbits follow one convention: the node is 0
for equatorial orbits, the argument of perigee is 0 for circular orbits, and the true
anomaly then carries the argument of latitude (or the true longitude).
"""
import math
from dataclasses import dataclass, replace
from typing import Union

import numpy as np

from ..errors import DegenerateOrbitError
from .environment import Environment

TWO_PI = 2.0 * math.pi
SINGULAR_TOL = 1e-11

ArrayLike = Union[float, np.ndarray]


def wrap_2pi(angle: ArrayLike) -> ArrayLike:
    """Wrap angle(s) to [0, 2*pi)."""
    wrapped = np.mod(angle, TWO_PI)
    if np.ndim(wrapped) == 0:
        wrapped = float(wrapped)
        return 0.0 if wrapped >= TWO_PI else wrapped
    return np.where(wrapped >= TWO_PI, 0.0, wrapped)


def wrap_pi(angle: ArrayLike) -> ArrayLike:
    """Wrap angle(s) to [-pi, pi)."""
    return np.mod(np.asarray(angle) + math.pi, TWO_PI) - math.pi if np.ndim(angle) \
        else (angle + math.pi) % TWO_PI - math.pi


def angle_distance(x: ArrayLike, y: ArrayLike) -> ArrayLike:
    """Minor-arc distance between two angles, in [0, pi]."""
    return np.abs(wrap_pi(np.asarray(x) - np.asarray(y))) if np.ndim(x) or np.ndim(y) \
        else abs(wrap_pi(x - y))


def true_to_eccentric(nu: float, e: float) -> float:
    return math.atan2(math.sqrt(1.0 - e * e) * math.sin(nu), e + math.cos(nu))


def eccentric_to_true(ecc_anomaly: float, e: float) -> float:
    return math.atan2(math.sqrt(1.0 - e * e) * math.sin(ecc_anomaly),
                      math.cos(ecc_anomaly) - e)


def true_to_mean(nu: float, e: float) -> float:
    """Mean anomaly from true anomaly (elliptic)."""
    ecc_anomaly = true_to_eccentric(nu, e)
    return ecc_anomaly - e * math.sin(ecc_anomaly)


def mean_to_true(mean_anomaly: float, e: float, tol: float = 1e-14) -> float:
    """True anomaly from mean anomaly by Newton iteration on Kepler's equation."""
    m = wrap_pi(mean_anomaly)
    ecc_anomaly = m if e < 0.8 else math.pi * (1.0 if m >= 0.0 else -1.0)
    for _ in range(50):
        step = (ecc_anomaly - e * math.sin(ecc_anomaly) - m) / (1.0 - e * math.cos(ecc_anomaly))
        ecc_anomaly -= step
        if abs(step) < tol:
            break
    return eccentric_to_true(ecc_anomaly, e)


@dataclass(frozen=True)
class ClassicalElements:
    """
    Osculating or mean Keplerian element set.

    Attributes
    ----------
    a : float
        Semi-major axis [km].
    e : float
        Eccentricity, 0 <= e < 1.
    i : float
        Inclination [rad], 0 <= i <= pi.
    raan : float
        Right ascension of the ascending node [rad], normalised to [0, 2*pi).
    argp : float
        Argument of perigee [rad], normalised to [0, 2*pi).
    nu : float
        True anomaly [rad], normalised to [0, 2*pi).
    epoch : float
        Seconds since the J2000 reference epoch.
    """
    a: float
    e: float
    i: float
    raan: float = 0.0
    argp: float = 0.0
    nu: float = 0.0
    epoch: float = 0.0

    def __post_init__(self):
        if not self.a > 0.0:
            raise DegenerateOrbitError(f"semi-major axis must be positive, got {self.a}")
        if not 0.0 <= self.e < 1.0:
            raise DegenerateOrbitError(f"eccentricity must be in [0, 1), got {self.e}")
        if not 0.0 <= self.i <= math.pi:
            raise DegenerateOrbitError(f"inclination must be in [0, pi], got {self.i}")
        for name in ("raan", "argp", "nu"):
            object.__setattr__(self, name, wrap_2pi(float(getattr(self, name))))

    @property
    def p(self) -> float:
        """Semi-latus rectum [km]."""
        return self.a * (1.0 - self.e * self.e)

    @property
    def r(self) -> float:
        """Orbital radius at the current true anomaly [km]."""
        return self.p / (1.0 + self.e * math.cos(self.nu))

    @property
    def arg_latitude(self) -> float:
        """Argument of latitude omega + nu [rad]."""
        return wrap_2pi(self.argp + self.nu)

    @property
    def mean_anomaly(self) -> float:
        return wrap_2pi(true_to_mean(self.nu, self.e))

    def h(self, mu: float) -> float:
        """Specific angular momentum magnitude [km^2/s]."""
        return math.sqrt(mu * self.p)

    def altitude(self, re: float) -> float:
        """Semi-major axis minus the equatorial radius [km]."""
        return self.a - re

    def replace(self, **changes) -> "ClassicalElements":
        return replace(self, **changes)

    @classmethod
    def circular(cls, a: float, i: float, raan: float = 0.0, arg_latitude: float = 0.0,
                 epoch: float = 0.0) -> "ClassicalElements":
        """Circular orbit; the argument of latitude is stored in ``nu``."""
        return cls(a=a, e=0.0, i=i, raan=raan, argp=0.0, nu=arg_latitude, epoch=epoch)


@dataclass(frozen=True, eq=False)
class CartesianState:
    """
    Inertial position/velocity state.

    Attributes
    ----------
    position : np.ndarray
        Position [km].
    velocity : np.ndarray
        Velocity [km/s].
    epoch : float
        Seconds since the J2000 reference epoch.
    """
    position: np.ndarray
    velocity: np.ndarray
    epoch: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "position", np.asarray(self.position, dtype=float).reshape(3))
        object.__setattr__(self, "velocity", np.asarray(self.velocity, dtype=float).reshape(3))

    @property
    def radius(self) -> float:
        return float(np.linalg.norm(self.position))

    @property
    def speed(self) -> float:
        return float(np.linalg.norm(self.velocity))


def perifocal_basis(raan: float, i: float, arg_latitude: float):
    """Radial, along-track and cross-track unit vectors of a circular-orbit point."""
    cos_o, sin_o = math.cos(raan), math.sin(raan)
    cos_i, sin_i = math.cos(i), math.sin(i)
    cos_u, sin_u = math.cos(arg_latitude), math.sin(arg_latitude)
    radial = np.array([cos_o * cos_u - sin_o * sin_u * cos_i,
                       sin_o * cos_u + cos_o * sin_u * cos_i,
                       sin_u * sin_i])
    along = np.array([-cos_o * sin_u - sin_o * cos_u * cos_i,
                      -sin_o * sin_u + cos_o * cos_u * cos_i,
                      cos_u * sin_i])
    normal = np.array([sin_o * sin_i, -cos_o * sin_i, cos_i])
    return radial, along, normal


def elements_to_cartesian(el: ClassicalElements, env: Environment) -> CartesianState:
    """
    Two-body conversion from classical elements to an inertial state.

    Parameters
    ----------
    el : ClassicalElements
        Element set with 0 <= e < 1.
    env : Environment
        Supplies the gravitational parameter.

    Returns
    -------
    CartesianState
    """
    p = el.p
    r = el.r
    theta = el.argp + el.nu
    radial, along, _ = perifocal_basis(el.raan, el.i, theta)
    position = r * radial
    sqrt_mu_p = math.sqrt(env.mu / p)
    v_r = sqrt_mu_p * el.e * math.sin(el.nu)
    v_t = sqrt_mu_p * (1.0 + el.e * math.cos(el.nu))
    velocity = v_r * radial + v_t * along
    return CartesianState(position, velocity, el.epoch)


def cartesian_to_elements(state: CartesianState, env: Environment) -> ClassicalElements:
    """
    Inverse of :func:`elements_to_cartesian`.

    Angles are resolved with two-argument arctangents so circular and equatorial orbits
    keep full precision; undefined angles are set to 0 as documented in the module.

    Raises
    ------
    DegenerateOrbitError
        For rectilinear (vanishing angular momentum) or non-elliptic states.
    """
    mu = env.mu
    r_vec, v_vec = state.position, state.velocity
    r = float(np.linalg.norm(r_vec))
    v2 = float(np.dot(v_vec, v_vec))
    h_vec = np.cross(r_vec, v_vec)
    h = float(np.linalg.norm(h_vec))
    if h < 1e-10 * r * math.sqrt(v2 + 1e-300) or h == 0.0:
        raise DegenerateOrbitError("angular momentum vanishes: rectilinear orbit")
    energy = 0.5 * v2 - mu / r
    if energy >= 0.0:
        raise DegenerateOrbitError("state is not on an elliptic orbit (e >= 1)")
    a = -mu / (2.0 * energy)
    e_vec = ((v2 - mu / r) * r_vec - float(np.dot(r_vec, v_vec)) * v_vec) / mu
    e = float(np.linalg.norm(e_vec))
    if e >= 1.0:
        raise DegenerateOrbitError("state is not on an elliptic orbit (e >= 1)")
    h_hat = h_vec / h
    i = math.atan2(math.hypot(h_vec[0], h_vec[1]), h_vec[2])
    node = np.array([-h_vec[1], h_vec[0], 0.0])
    n = float(np.linalg.norm(node))
    x_hat = np.array([1.0, 0.0, 0.0])

    def _angle(from_vec, to_vec):
        return math.atan2(float(np.dot(np.cross(from_vec, to_vec), h_hat)),
                          float(np.dot(from_vec, to_vec)))

    equatorial = n < SINGULAR_TOL * h
    circular = e < SINGULAR_TOL
    if not equatorial:
        node_hat = node / n
        raan = math.atan2(node[1], node[0])
        if not circular:
            argp = _angle(node_hat, e_vec)
            nu = _angle(e_vec, r_vec)
        else:
            argp = 0.0
            nu = _angle(node_hat, r_vec)
    else:
        raan = 0.0
        if not circular:
            argp = _angle(x_hat, e_vec)
            nu = _angle(e_vec, r_vec)
        else:
            argp = 0.0
            nu = _angle(x_hat, r_vec)
    return ClassicalElements(a=a, e=e, i=i, raan=raan, argp=argp, nu=nu, epoch=state.epoch)
