"""Orbital kinematics and environment models shared by every other sub-package."""
from .eclipse import (eclipse_center_arglat, in_shadow, shadow_half_angle, sun_direction,
                      sunlit_fraction)
from .elements import (CartesianState, ClassicalElements, angle_distance,
                       cartesian_to_elements, elements_to_cartesian, wrap_2pi, wrap_pi)
from .environment import AtmosphereTable, Environment, SpacecraftConfig
from .epochs import format_epoch, parse_epoch
from .mean_elements import mean_to_osculating, osculating_to_mean
from .perturbations import (atmospheric_density, drag_acceleration, j2_acceleration,
                            j2_raan_rate)

__all__ = [
    "AtmosphereTable", "CartesianState", "ClassicalElements", "Environment",
    "SpacecraftConfig", "angle_distance", "atmospheric_density", "cartesian_to_elements",
    "drag_acceleration", "eclipse_center_arglat", "elements_to_cartesian", "format_epoch",
    "in_shadow", "j2_acceleration", "j2_raan_rate", "mean_to_osculating", "osculating_to_mean",
    "parse_epoch", "shadow_half_angle", "sun_direction", "sunlit_fraction", "wrap_2pi",
    "wrap_pi",
]
