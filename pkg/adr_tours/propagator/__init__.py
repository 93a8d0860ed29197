"""Osculating-dynamics flight of tour legs under guidance or open loop."""
from .config import ABORT_ALTITUDE, OPEN_LOOP, PROPAGATION_LAWS, PropagationConfig
from .dynamics import equations_of_motion, rtn_basis, rtn_to_inertial, specific_energy
from .log import TerminalErrors, TrajectoryLog
from .propagate import LegPropagator, forward_propagate_pmdt, propagate_leg
from .throttle import DeadbandThresholds, ThrottleState, drift_deadband, duty_throttle
from .tour import COMPARISON_HEADER, TourFlight, TourFlyer, fly_tour, leg_start

__all__ = [
    "ABORT_ALTITUDE", "COMPARISON_HEADER", "DeadbandThresholds", "LegPropagator", "OPEN_LOOP",
    "PROPAGATION_LAWS", "PropagationConfig", "TerminalErrors", "ThrottleState", "TourFlight",
    "TourFlyer", "TrajectoryLog", "drift_deadband", "duty_throttle", "equations_of_motion",
    "fly_tour", "forward_propagate_pmdt", "leg_start", "propagate_leg", "rtn_basis",
    "rtn_to_inertial", "specific_energy",
]
