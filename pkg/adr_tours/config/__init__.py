"""Mission configuration files and weight tables."""
from .mission import (CONFIG_VERSION, DebrisEntry, GuidanceSettings, MissionConfig,
                      TourSettings, TunerSettings, dump_weights, load_mission_config,
                      load_weights, weights_document)

__all__ = [
    "CONFIG_VERSION", "DebrisEntry", "GuidanceSettings", "MissionConfig", "TourSettings",
    "TunerSettings", "dump_weights", "load_mission_config", "load_weights",
    "weights_document",
]
