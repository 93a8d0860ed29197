"""
Gauss variational equations for the slow elements and the shared guidance types.

Classes
-------
TargetState : Target (a, e, i, RAAN) of a guidance law.
ThrustDirection : Unit thrust direction in the (radial, along-track, cross-track) frame.
GveMatrix : Sensitivity of (a, e, i, RAAN) to an RTN acceleration.
"""
import math
from dataclasses import dataclass

import numpy as np

from ..astro.elements import ClassicalElements, wrap_pi
from ..astro.environment import Environment
from ..edelbaum.profile import ProfileSample

SIN_I_TOL = 1e-9
ACTIVE_TOL = 1e-12


@dataclass(frozen=True)
class TargetState:
    """
    Attributes
    ----------
    a : float
        [km]
    e : float
    i, raan : float
        [rad]
    """
    a: float
    e: float
    i: float
    raan: float

    @classmethod
    def from_elements(cls, el: ClassicalElements) -> "TargetState":
        return cls(el.a, el.e, el.i, el.raan)

    @classmethod
    def from_sample(cls, sample: ProfileSample, e: float = 0.0) -> "TargetState":
        return cls(sample.a, e, sample.i, sample.raan)

    def as_array(self) -> np.ndarray:
        return np.array([self.a, self.e, self.i, self.raan])

    def errors(self, el: ClassicalElements):
        """(a - a_T [km], i - i_T [rad], minor-arc RAAN difference [rad])."""
        return el.a - self.a, el.i - self.i, float(wrap_pi(el.raan - self.raan))


@dataclass(frozen=True, eq=False)
class ThrustDirection:
    """
    Attributes
    ----------
    vector : np.ndarray
        Unit vector (radial, along-track, cross-track); zeros when inactive.
    active : bool
    """
    vector: np.ndarray
    active: bool = True

    @classmethod
    def inactive(cls) -> "ThrustDirection":
        return cls(np.zeros(3), False)

    @classmethod
    def from_raw(cls, raw: np.ndarray) -> "ThrustDirection":
        norm = float(np.linalg.norm(raw))
        if not np.isfinite(norm) or norm < ACTIVE_TOL:
            return cls.inactive()
        return cls(np.asarray(raw, dtype=float) / norm, True)

    def angles(self):
        """In-plane angle from the along-track axis and out-of-plane angle [rad]."""
        r, t, n = self.vector
        return math.atan2(r, t), math.atan2(n, math.hypot(r, t))


@dataclass(frozen=True, eq=False)
class GveMatrix:
    """
    Attributes
    ----------
    matrix : np.ndarray
        4x3 matrix, rows (a, e, i, RAAN), columns (radial, along-track, cross-track).
    raan_available : bool
        False on equatorial orbits, where the RAAN row is undefined and set to zero.
    """
    matrix: np.ndarray
    raan_available: bool = True

    def rates(self, acceleration: np.ndarray) -> np.ndarray:
        """Element rates for an RTN acceleration [km/s^2]."""
        return self.matrix @ np.asarray(acceleration, dtype=float)


def gve_matrix(el: ClassicalElements, env: Environment) -> GveMatrix:
    """
    Gauss variational equations of (a, e, i, RAAN).

    Parameters
    ----------
    el : ClassicalElements
    env : Environment

    Returns
    -------
    GveMatrix
    """
    a, e, nu = el.a, el.e, el.nu
    p = a * (1.0 - e * e)
    h = math.sqrt(env.mu * p)
    r = p / (1.0 + e * math.cos(nu))
    u = el.argp + nu
    sin_i = math.sin(el.i)
    b = np.zeros((4, 3))
    b[0, 0] = 2.0 * a * a * e * math.sin(nu) / h
    b[0, 1] = 2.0 * a * a * p / (h * r)
    b[1, 0] = p * math.sin(nu) / h
    b[1, 1] = ((p + r) * math.cos(nu) + r * e) / h
    b[2, 2] = r * math.cos(u) / h
    available = abs(sin_i) > SIN_I_TOL
    if available:
        b[3, 2] = r * math.sin(u) / (h * sin_i)
    return GveMatrix(b, available)
