"""
Thrust-drift-thrust RAAN-matching transfer.

Classes
-------
RaanTransfer : Phase profiles and totals of one matching transfer.
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional

from ..astro.elements import ClassicalElements
from ..astro.environment import Environment, SpacecraftConfig
from ..astro.perturbations import j2_raan_rate
from ..edelbaum.classical import EdelbaumBoundary
from ..edelbaum.extended import DEFAULT_SEGMENTS, ExtendedEdelbaumOptions, extended_edelbaum
from ..edelbaum.profile import TransferProfile
from .drift import DriftOrbit, drift_profile, drift_station_keeping_dv, drift_time

logger = logging.getLogger(__name__)

DRIFT_TIME_TOLERANCE = 1.0
MAX_PHASE_PASSES = 5


@dataclass(frozen=True)
class RaanTransfer:
    """
    Attributes
    ----------
    phase1 : TransferProfile
        Thrust arc from the departure orbit to the drift orbit.
    drift : TransferProfile
        Coast arc on the drift orbit.
    phase2 : TransferProfile
        Thrust arc from the drift orbit to the target orbit.
    drift_duration : float
        [s]
    drift_dv : float
        Station-keeping delta-v on the drift orbit [km/s].
    """
    phase1: TransferProfile
    drift: TransferProfile
    phase2: TransferProfile
    drift_duration: float
    drift_dv: float

    @property
    def dv(self) -> float:
        return self.phase1.dv_total + self.drift_dv + self.phase2.dv_total

    @property
    def tof(self) -> float:
        return self.phase1.tof + self.drift_duration + self.phase2.tof

    @property
    def end_mass(self) -> float:
        return float(self.phase2.mass[-1])

    @property
    def segments(self) -> List[TransferProfile]:
        return [self.phase1, self.drift, self.phase2]


def raan_matching_transfer(origin: ClassicalElements, target: ClassicalElements,
                           drift: DriftOrbit, sc: SpacecraftConfig, env: Environment, *,
                           mass0: Optional[float] = None, n_segments: int = DEFAULT_SEGMENTS,
                           options: Optional[ExtendedEdelbaumOptions] = None,
                           ) -> RaanTransfer:
    """
    Reach ``target`` in (a, i, RAAN) from ``origin`` through a drift orbit.

    The second thrust phase is re-evaluated at its actual start epoch until the drift time
    changes by less than a second; the final phase is then shifted so the RAAN of the
    arrival sample equals the target RAAN at the arrival epoch.

    Parameters
    ----------
    origin : ClassicalElements
        Departure orbit (mean, quasi-circular) and departure epoch.
    target : ClassicalElements
        Target orbit at its own epoch; its RAAN precesses at the J2 rate.
    drift : DriftOrbit
    sc : SpacecraftConfig
    env : Environment
    mass0 : float, optional
        Servicer mass at departure; defaults to the wet mass.
    n_segments : int, optional
        Segments per thrust phase.
    options : ExtendedEdelbaumOptions, optional

    Returns
    -------
    RaanTransfer
    """
    mass = sc.wet_mass if mass0 is None else mass0
    a_drift = drift.a(env)
    target_rate = j2_raan_rate(target.a, target.e, target.i, env)
    drift_rate = drift.raan_rate(env)

    phase1 = extended_edelbaum(
        EdelbaumBoundary.from_orbits(origin.a, a_drift, origin.i, drift.i_d, env,
                                     origin.raan, origin.epoch),
        sc, env, n_segments, mass0=mass, options=options)
    t1_end = phase1.end_epoch
    raan1_end = float(phase1.raan[-1])
    mass1_end = float(phase1.mass[-1])
    raan_target_t0 = target.raan + target_rate * (origin.epoch - target.epoch)

    duration = 0.0
    phase2 = None
    for _ in range(MAX_PHASE_PASSES):
        drift_fuel = _drift_fuel(drift, duration, sc, env, mass1_end)
        phase2 = extended_edelbaum(
            EdelbaumBoundary.from_orbits(a_drift, target.a, drift.i_d, target.i, env,
                                         raan1_end + drift_rate * duration, t1_end + duration),
            sc, env, n_segments, mass0=mass1_end - drift_fuel, options=options)
        raan_after = raan1_end + float(phase2.raan[-1] - phase2.raan[0])
        new_duration = drift_time(raan_after, drift_rate, raan_target_t0, target_rate,
                                  phase1.tof, phase2.tof)
        converged = abs(new_duration - duration) < DRIFT_TIME_TOLERANCE
        duration = new_duration
        if converged:
            break

    drift_dv = drift_station_keeping_dv(drift, duration, sc, env, mass0=mass1_end)
    coast = drift_profile(drift, t1_end, duration, raan1_end, sc, env, mass0=mass1_end,
                          dv0=float(phase1.dv_cum[-1]))
    # align phase 2 with the converged drift
    phase2 = phase2.shifted(
        dt=coast.end_epoch - phase2.start_epoch,
        ddv=float(coast.dv_cum[-1]) - float(phase2.dv_cum[0]),
        draan=float(coast.raan[-1]) - float(phase2.raan[0]),
        dmass=float(coast.mass[-1]) - float(phase2.mass[0]))
    transfer = RaanTransfer(phase1, coast, phase2, duration, drift_dv)
    logger.debug("RAAN match via drift %.1f km / %.3f deg: drift %.2f d, dv %.2f m/s",
                 a_drift - env.re, math.degrees(drift.i_d), duration / 86400.0,
                 transfer.dv * 1000.0)
    return transfer


def _drift_fuel(drift: DriftOrbit, duration: float, sc: SpacecraftConfig, env: Environment,
                mass: float) -> float:
    dv = drift_station_keeping_dv(drift, duration, sc, env, mass0=mass)
    return mass * (1.0 - math.exp(-dv / sc.exhaust_velocity(env.g0)))
