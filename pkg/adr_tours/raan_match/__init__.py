"""Thrust-drift-thrust transfers that use differential J2 precession to match RAAN."""
from .drift import (DriftOrbit, drift_profile, drift_station_keeping_dv, drift_time)
from .transfer import RaanTransfer, raan_matching_transfer

__all__ = ["DriftOrbit", "RaanTransfer", "drift_profile", "drift_station_keeping_dv",
           "drift_time", "raan_matching_transfer"]
