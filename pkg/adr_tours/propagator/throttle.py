"""
Thrust gating: symmetric duty-cycle windows and the drift-orbit deadband.

Classes
-------
ThrottleState : Deadband state (thrusting or coasting).
DeadbandThresholds : Turn-on and turn-off limits of the deadband.
"""
import enum
import math
from dataclasses import dataclass
from typing import Optional

from ..astro.elements import ClassicalElements, angle_distance, wrap_pi
from ..errors import ConfigError


class ThrottleState(enum.Enum):
    OFF = 0
    ON = 1


@dataclass(frozen=True)
class DeadbandThresholds:
    """
    Attributes
    ----------
    on_a, off_a : float
        [km]
    on_i, off_i, on_raan, off_raan : float
        [rad]
    """
    on_a: float = 5.0
    on_i: float = math.radians(0.1)
    on_raan: float = math.radians(0.1)
    off_a: float = 0.5
    off_i: float = math.radians(0.01)
    off_raan: float = math.radians(0.01)

    def __post_init__(self):
        pairs = ((self.on_a, self.off_a), (self.on_i, self.off_i),
                 (self.on_raan, self.off_raan))
        if any(not on > off >= 0.0 for on, off in pairs):
            raise ConfigError("deadband turn-on thresholds must exceed the turn-off ones")


def duty_throttle(theta: float, theta_c: Optional[float], duty_ratio: float) -> int:
    """
    Duty-cycle gate at argument of latitude ``theta``.

    Thrust is off within pi*(1 - DR)/2 of the eclipse centre ``theta_c`` and of its
    antipode; ``theta_c`` None anchors the windows at 0.

    Returns
    -------
    int
        1 when thrust is allowed, 0 otherwise.
    """
    if not 0.0 < duty_ratio <= 1.0:
        raise ConfigError("duty ratio must be in (0, 1]")
    half_width = 0.5 * math.pi * (1.0 - duty_ratio)
    centre = 0.0 if theta_c is None else theta_c
    if angle_distance(theta, centre) < half_width:
        return 0
    if angle_distance(theta, centre + math.pi) < half_width:
        return 0
    return 1


def drift_deadband(mean_el: ClassicalElements, reference_a: float, reference_i: float,
                   reference_raan: float, state: ThrottleState,
                   thresholds: Optional[DeadbandThresholds] = None) -> ThrottleState:
    """
    Hysteresis on the drift-orbit tracking error.

    OFF switches ON once any error exceeds its turn-on threshold; ON switches OFF once all
    errors are inside their turn-off thresholds.
    """
    th = thresholds or DeadbandThresholds()
    da = abs(mean_el.a - reference_a)
    di = abs(mean_el.i - reference_i)
    draan = abs(float(wrap_pi(mean_el.raan - reference_raan)))
    if state is ThrottleState.OFF:
        if da > th.on_a or di > th.on_i or draan > th.on_raan:
            return ThrottleState.ON
        return ThrottleState.OFF
    if da < th.off_a and di < th.off_i and draan < th.off_raan:
        return ThrottleState.OFF
    return ThrottleState.ON
