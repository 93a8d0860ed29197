"""
Equations of motion: two-body gravity, J2, drag and a held thrust acceleration.

The state vector is [r (3) km, v (3) km/s, mass kg, delta-v integral km/s].
"""
import math
from typing import Callable, Optional

import numpy as np

from ..astro.elements import CartesianState
from ..astro.environment import Environment
from ..astro.perturbations import drag_magnitude, j2_acceleration


def rtn_basis(position: np.ndarray, velocity: np.ndarray) -> np.ndarray:
    """Rows are the radial, along-track and cross-track unit vectors."""
    radial = position / np.linalg.norm(position)
    h = np.cross(position, velocity)
    normal = h / np.linalg.norm(h)
    along = np.cross(normal, radial)
    return np.vstack((radial, along, normal))


def rtn_to_inertial(vector: np.ndarray, position: np.ndarray, velocity: np.ndarray) -> np.ndarray:
    return np.asarray(vector, dtype=float) @ rtn_basis(position, velocity)


def drag_vector(position: np.ndarray, velocity: np.ndarray, mass: float,
                area_coefficient: float, env: Environment) -> np.ndarray:
    """Drag acceleration [km/s^2] against the inertial velocity."""
    speed = float(np.linalg.norm(velocity))
    if area_coefficient == 0.0 or speed == 0.0:
        return np.zeros(3)
    altitude = float(np.linalg.norm(position)) - env.re
    magnitude = drag_magnitude(altitude, speed, area_coefficient, mass, env)
    return -magnitude * velocity / speed


def equations_of_motion(env: Environment, area_coefficient: float, exhaust_velocity: float,
                        thrust: Callable[[np.ndarray], np.ndarray],
                        drag: bool = True) -> Callable[[float, np.ndarray], np.ndarray]:
    """
    Right-hand side for ``solve_ivp``.

    Parameters
    ----------
    env : Environment
    area_coefficient : float
        Cd*A [m^2].
    exhaust_velocity : float
        [km/s]
    thrust : callable
        Maps the state vector to the inertial thrust acceleration [km/s^2].
    drag : bool, optional
    """
    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        r, v, mass = y[:3], y[3:6], y[6]
        radius = math.sqrt(float(np.dot(r, r)))
        acc = -env.mu * r / radius ** 3 + j2_acceleration(CartesianState(r, v), env)
        if drag:
            acc = acc + drag_vector(r, v, mass, area_coefficient, env)
        a_thrust = thrust(y)
        magnitude = float(np.linalg.norm(a_thrust))
        out = np.empty(8)
        out[:3] = v
        out[3:6] = acc + a_thrust
        out[6] = -mass * magnitude / exhaust_velocity
        out[7] = magnitude
        return out
    return rhs


def specific_energy(y: np.ndarray, env: Environment) -> float:
    return 0.5 * float(np.dot(y[3:6], y[3:6])) - env.mu / float(np.linalg.norm(y[:3]))


def held_thrust(direction_rtn: Optional[np.ndarray], magnitude: float
                ) -> Callable[[np.ndarray], np.ndarray]:
    """Thrust of fixed RTN direction and fixed acceleration magnitude, rotated with the state."""
    if direction_rtn is None or magnitude == 0.0:
        zero = np.zeros(3)
        return lambda y: zero
    vector = magnitude * np.asarray(direction_rtn, dtype=float)
    return lambda y: rtn_to_inertial(vector, y[:3], y[3:6])


def thrust_force(direction_rtn: Optional[np.ndarray], max_thrust: float
                 ) -> Callable[[np.ndarray], np.ndarray]:
    """Thrust of fixed RTN direction at constant force [N]; acceleration grows as mass drops."""
    if direction_rtn is None:
        zero = np.zeros(3)
        return lambda y: zero
    unit = np.asarray(direction_rtn, dtype=float)
    return lambda y: rtn_to_inertial(unit * (max_thrust / y[6] / 1000.0), y[:3], y[3:6])
