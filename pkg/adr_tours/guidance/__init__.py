"""Closed-loop thrust-direction laws tracking a reference trajectory."""
from typing import Dict

from ..errors import ConfigError
from .base import GuidanceLaw, LyapunovGuidance
from .dvlaw import DvLawGuidance, dvlaw, dvlaw_direction, dvlaw_value
from .gve import GveMatrix, TargetState, ThrustDirection, gve_matrix
from .qlaw import QLawGuidance, max_rates, qlaw, qlaw_direction, qlaw_value
from .ruggiero import RuggieroGuidance, element_directions, ruggiero, ruggiero_direction
from .weights import (DEFAULT_WEIGHTS, LAWS, PINNED_SLOTS, DvLawWeights, LegWeights,
                      QLawWeights, RuggieroWeights, default_weights, weights_from_vector)

GUIDANCE_LAWS: Dict[str, GuidanceLaw] = {"ruggiero": ruggiero, "dvlaw": dvlaw, "qlaw": qlaw}


def get_law(name: str) -> GuidanceLaw:
    try:
        return GUIDANCE_LAWS[name]
    except KeyError:
        raise ConfigError(f"unknown guidance law {name!r}; expected one of {LAWS}") from None


__all__ = [
    "DEFAULT_WEIGHTS", "DvLawGuidance", "DvLawWeights", "GUIDANCE_LAWS", "GuidanceLaw",
    "GveMatrix", "LAWS", "LegWeights", "LyapunovGuidance", "PINNED_SLOTS", "QLawGuidance",
    "QLawWeights", "RuggieroGuidance", "RuggieroWeights", "TargetState", "ThrustDirection",
    "default_weights", "dvlaw", "dvlaw_direction", "dvlaw_value", "element_directions",
    "get_law", "gve_matrix", "max_rates", "qlaw", "qlaw_direction", "qlaw_value", "ruggiero",
    "ruggiero_direction", "weights_from_vector",
]
