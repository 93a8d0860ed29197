"""Classical and extended Edelbaum low-thrust transfers between circular orbits."""
from .classical import (EdelbaumArc, EdelbaumBoundary, classical_delta_v, classical_tof,
                        evaluate_profile, initial_yaw)
from .extended import DEFAULT_SEGMENTS, ExtendedEdelbaumOptions, extended_edelbaum
from .profile import ProfileSample, TransferProfile

__all__ = [
    "DEFAULT_SEGMENTS", "EdelbaumArc", "EdelbaumBoundary", "ExtendedEdelbaumOptions",
    "ProfileSample", "TransferProfile", "classical_delta_v", "classical_tof",
    "evaluate_profile", "extended_edelbaum", "initial_yaw",
]
