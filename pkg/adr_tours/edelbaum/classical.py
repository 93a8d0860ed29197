"""
Classical Edelbaum transfer between inclined circular orbits.

Constant-acceleration, piecewise-constant-yaw solution: the velocity changes linearly with
the accumulated delta-v ``s`` along a fixed direction in the (V0, plane-change) plane, so
the orbit speed follows the law of cosines V(s)^2 = V0^2 + s^2 - 2 V0 s cos(beta0).

Classes
-------
EdelbaumBoundary : Circular-orbit boundary conditions of a transfer.
EdelbaumArc : Closed-form state along a transfer as a function of spent delta-v.
"""
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..astro.environment import Environment
from ..errors import DomainError
from .profile import TransferProfile


@dataclass(frozen=True)
class EdelbaumBoundary:
    """
    Boundary conditions of an Edelbaum transfer.

    Attributes
    ----------
    v0, vf : float
        Initial and final circular speeds [km/s].
    di : float
        Signed inclination change i_f - i_0 [rad].
    i0 : float
        Initial inclination [rad].
    raan0 : float
        Initial RAAN [rad].
    epoch0 : float
        Departure epoch [s since J2000].
    """
    v0: float
    vf: float
    di: float
    i0: float = 0.0
    raan0: float = 0.0
    epoch0: float = 0.0

    def __post_init__(self):
        if not (self.v0 > 0.0 and self.vf > 0.0):
            raise DomainError("Edelbaum boundary speeds must be positive")
        if abs(self.di) >= math.pi:
            raise DomainError("Edelbaum inclination change must be smaller than pi")

    @classmethod
    def from_orbits(cls, a0: float, af: float, i0: float, i_f: float, env: Environment,
                    raan0: float = 0.0, epoch0: float = 0.0) -> "EdelbaumBoundary":
        """Boundary between circular orbits of radius ``a0`` and ``af`` [km]."""
        return cls(env.circular_speed(a0), env.circular_speed(af), i_f - i0, i0, raan0, epoch0)

    @property
    def plane_change_sign(self) -> int:
        return int(np.sign(self.di))


def classical_delta_v(b: EdelbaumBoundary) -> float:
    """Total delta-v [km/s]: sqrt(V0^2 + Vf^2 - 2 V0 Vf cos(pi/2 * di))."""
    if b.di == 0.0:
        return abs(b.v0 - b.vf)
    value = b.v0 ** 2 + b.vf ** 2 - 2.0 * b.v0 * b.vf * math.cos(0.5 * math.pi * abs(b.di))
    return math.sqrt(max(0.0, value))


def classical_tof(dv: float, f: float) -> float:
    """Time of flight [s] for ``dv`` [km/s] at constant acceleration ``f`` [km/s^2]."""
    if not f > 0.0:
        raise DomainError("thrust acceleration must be positive")
    return dv / f


def initial_yaw(b: EdelbaumBoundary) -> float:
    """
    Initial yaw angle beta0 [rad] from
    tan(beta0) = sin(pi/2 di) / (V0/Vf - cos(pi/2 di)), quadrant by atan2.

    Coplanar raising (and the identity transfer) gives 0, coplanar lowering gives pi.
    """
    half = 0.5 * math.pi * abs(b.di)
    return math.atan2(math.sin(half), b.v0 / b.vf - math.cos(half))


@dataclass(frozen=True)
class EdelbaumArc:
    """
    Closed-form Edelbaum state after spending delta-v ``s`` on a boundary.

    Attributes
    ----------
    boundary : EdelbaumBoundary
    beta0 : float
        Initial yaw [rad].
    dv : float
        Total delta-v of the arc [km/s].
    """
    boundary: EdelbaumBoundary
    beta0: float
    dv: float

    @classmethod
    def solve(cls, boundary: EdelbaumBoundary) -> "EdelbaumArc":
        return cls(boundary, initial_yaw(boundary), classical_delta_v(boundary))

    def speed(self, s: np.ndarray) -> np.ndarray:
        v0, c = self.boundary.v0, math.cos(self.beta0)
        return np.sqrt(np.maximum(v0 * v0 + s * s - 2.0 * v0 * s * c, 0.0))

    def semi_major_axis(self, s: np.ndarray, mu: float) -> np.ndarray:
        v0, c = self.boundary.v0, math.cos(self.beta0)
        return mu / (v0 * v0 + s * s - 2.0 * v0 * s * c)

    def inclination(self, s: np.ndarray) -> np.ndarray:
        b = self.boundary
        s = np.asarray(s, dtype=float)
        sin_b = math.sin(self.beta0)
        if abs(sin_b) < 1e-15 or b.di == 0.0:
            return np.full_like(s, b.i0)
        angle = np.arctan((s - b.v0 * math.cos(self.beta0)) / (b.v0 * sin_b))
        return b.i0 + np.sign(b.di) * (2.0 / math.pi) * (angle + 0.5 * math.pi - self.beta0)

    def yaw(self, s: np.ndarray) -> np.ndarray:
        v0 = self.boundary.v0
        return np.arctan2(v0 * math.sin(self.beta0), v0 * math.cos(self.beta0) - s)


def evaluate_profile(b: EdelbaumBoundary, f: float, n_segments: int, env: Environment,
                     mass0: float = 1.0, exhaust_velocity: Optional[float] = None,
                     ) -> TransferProfile:
    """
    Sample the classical Edelbaum solution on ``n_segments`` equal time steps.

    Parameters
    ----------
    b : EdelbaumBoundary
    f : float
        Constant thrust acceleration [km/s^2].
    n_segments : int
        Number of segments, at least 2.
    env : Environment
        Supplies mu.
    mass0 : float, optional
        Initial mass [kg] carried in the mass column.
    exhaust_velocity : float, optional
        Isp*g0 [km/s]; when given the mass column follows the rocket equation, otherwise
        it stays at ``mass0``.

    Returns
    -------
    TransferProfile
        RAAN held at ``b.raan0``; throttle fraction 1.
    """
    if n_segments < 2:
        raise DomainError("at least two segments are required")
    arc = EdelbaumArc.solve(b)
    tof = classical_tof(arc.dv, f)
    if tof == 0.0:
        return _single_sample(b, mass0, arc.beta0, env)
    t = np.arange(n_segments + 1) * (tof / n_segments)
    s = f * t
    mass = (np.full_like(s, mass0) if exhaust_velocity is None
            else mass0 * np.exp(-s / exhaust_velocity))
    return TransferProfile(
        t=b.epoch0 + t, a=arc.semi_major_axis(s, env.mu), i=arc.inclination(s),
        raan=np.full_like(s, b.raan0), dv_cum=s, mass=mass, beta=arc.yaw(s),
        w=np.ones_like(s), kind="thrust", plane_change_sign=b.plane_change_sign)


def _single_sample(b: EdelbaumBoundary, mass0: float, beta0: float,
                   env: Environment) -> TransferProfile:
    return TransferProfile(
        t=[b.epoch0], a=[env.circular_radius(b.v0)], i=[b.i0], raan=[b.raan0], dv_cum=[0.0],
        mass=[mass0], beta=[beta0], w=[1.0], kind="thrust", plane_change_sign=0)
