"""
Flying a whole tour: every transfer leg propagated from its reference start.

Classes
-------
TourFlight : Per-leg logs of one law and the tour-level comparison row.
TourFlyer : Callable propagating every transfer leg of a TourSolution.
"""
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from ..astro.elements import ClassicalElements
from ..astro.environment import Environment, SpacecraftConfig
from ..astro.epochs import SECONDS_PER_DAY
from ..guidance.weights import LegWeights
from ..tour.solution import TourLeg, TourSolution
from .config import OPEN_LOOP, PropagationConfig
from .log import TrajectoryLog
from .propagate import LegPropagator, propagate_leg

logger = logging.getLogger(__name__)

COMPARISON_HEADER = ("Scheme", "TOF (days)", "Fuel (kg)", "Delta a (km)", "Delta i (deg)",
                     "Delta RAAN (deg)")
SCHEME_LABELS = {OPEN_LOOP: "Forward Propagated PMDT", "ruggiero": "Ruggiero",
                 "dvlaw": "Delta-v Law", "qlaw": "Q-Law"}


def leg_start(leg: TourLeg) -> ClassicalElements:
    """Mean circular elements at the first reference sample of ``leg``."""
    first = leg.segments[0].start()
    return ClassicalElements.circular(first.a, first.i, first.raan, epoch=first.t)


@dataclass(frozen=True, eq=False)
class TourFlight:
    """
    Attributes
    ----------
    law : str
    logs : tuple of TrajectoryLog
        One per transfer leg, in flight order.
    dwell_tof : float
        Reference time [s] of the handover and proximity dwells.
    dwell_fuel : float
        Reference propellant [kg] of the dwells.
    """
    law: str
    logs: tuple
    dwell_tof: float = 0.0
    dwell_fuel: float = 0.0
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def tof(self) -> float:
        return sum(log.tof for log in self.logs) + self.dwell_tof

    @property
    def fuel(self) -> float:
        return sum(log.fuel for log in self.logs) + self.dwell_fuel

    def total_errors(self):
        """Sums of the absolute per-leg errors (km, deg, deg)."""
        da = sum(abs(log.errors.da) for log in self.logs)
        di = sum(abs(log.errors.di) for log in self.logs)
        draan = sum(abs(log.errors.draan) for log in self.logs)
        return da, di, draan

    def comparison_row(self) -> List[str]:
        da, di, draan = self.total_errors()
        return [SCHEME_LABELS.get(self.law, self.law), f"{self.tof / SECONDS_PER_DAY:.1f}",
                f"{self.fuel:.2f}", f"{da:.3f}", f"{di:.3f}", f"{draan:.3f}"]

    def error_rows(self) -> List[List[str]]:
        """Per-leg rows: leg number, |da| km, |di| deg, |dRAAN| deg."""
        return [[str(n + 1), f"{abs(log.errors.da):.3f}", f"{abs(log.errors.di):.3f}",
                 f"{abs(log.errors.draan):.3f}"] for n, log in enumerate(self.logs)]

    def summary(self) -> Dict[str, Any]:
        da, di, draan = self.total_errors()
        return {"law": self.law, "tof_days": self.tof / SECONDS_PER_DAY, "fuel_kg": self.fuel,
                "da_km": da, "di_deg": di, "draan_deg": draan,
                "legs": [log.summary() for log in self.logs]}

    def to_json(self, path: Union[str, Path]) -> None:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.summary(), f, indent=2)


class TourFlyer:
    """Propagates each transfer leg of a tour with one law; dwells keep their reference."""

    def __init__(self, propagator: Optional[LegPropagator] = None):
        self.propagator = propagator or propagate_leg

    def __call__(self, solution: TourSolution, law: str, sc: SpacecraftConfig,
                 env: Environment, weights: Optional[LegWeights] = None,
                 legs: Optional[List[int]] = None, **settings) -> TourFlight:
        """
        Parameters
        ----------
        solution : TourSolution
        law : str
            Guidance law name or ``open_loop``.
        sc : SpacecraftConfig
        env : Environment
        weights : LegWeights, optional
            Required for guided laws.
        legs : list of int, optional
            1-based transfer legs to fly; all by default.
        settings
            Extra PropagationConfig fields (control_step, rtol, ...).
        """
        logs: List[TrajectoryLog] = []
        dwell_tof = 0.0
        dwell_fuel = 0.0
        for leg in solution.legs:
            if not leg.is_transfer:
                dwell_tof += leg.tof
                dwell_fuel += leg.fuel
                continue
            if legs is not None and leg.number not in legs:
                continue
            cfg = PropagationConfig(
                law=law, reference=leg.segments,
                weights=None if weights is None else weights.for_leg(leg.kind),
                area_coefficient=sc.ballistic_coefficient() + leg.carried_area,
                carried_mass=leg.carried_mass, **settings)
            logs.append(self.propagator(leg_start(leg), cfg, sc, env,
                                        mass0=leg.mass_start + leg.carried_mass,
                                        leg_index=leg.number))
        flight = TourFlight(law, tuple(logs), dwell_tof, dwell_fuel)
        logger.info("%s: tof %.1f d, fuel %.2f kg", law, flight.tof / SECONDS_PER_DAY,
                    flight.fuel)
        return flight


fly_tour = TourFlyer()
