"""
Plan use case: optimise a tour and write the leg table, the tour record and the profiles.

Classes
-------
PlanTour : Callable running the tour optimiser for a configured mission.
"""
import logging
import math
from typing import Any, Dict, Optional

from ..astro.environment import Environment
from ..astro.epochs import SECONDS_PER_DAY
from ..tour.optimizer import TourOptimizer, optimize_tour
from ..tour.solution import TourSolution
from .common import (LEGS_FILE, PROFILE_DIR, SOLUTION_FILE, CatalogSource, ConfigSource,
                     output_dir, resolve_catalog, resolve_config)

logger = logging.getLogger(__name__)


def plan_summary(solution: TourSolution, env: Environment) -> Dict[str, Any]:
    """JSON-ready digest of a planned tour."""
    drifts = [{"leg": leg.number, "altitude_km": leg.drift.altitude(env),
               "radius_km": leg.drift.a(env), "inclination_deg": math.degrees(leg.drift.i_d)}
              for leg in solution.legs if leg.drift is not None]
    return {
        "objective": solution.objective,
        "dv_m_s": solution.dv * 1000.0,
        "tof_days": solution.tof / SECONDS_PER_DAY,
        "fuel_kg": solution.fuel,
        "constraint_active": solution.constraint_active(),
        "legs": [list(row) for row in solution.leg_rows()],
        "drift_orbits": drifts,
    }


class PlanTour:
    """Optimise the configured tour; outputs go to the configuration's output directory."""

    def __init__(self, optimizer: Optional[TourOptimizer] = None):
        self.optimizer = optimizer or optimize_tour

    def __call__(self, config: ConfigSource, catalog: CatalogSource,
                 objective: Optional[str] = None, seed: Optional[int] = None,
                 out: Optional[str] = None, write: bool = True) -> Dict[str, Any]:
        """
        Parameters
        ----------
        config : MissionConfig, mapping or path
        catalog : records, element-set text or path
        objective : str, optional
            Overrides the configured objective.
        seed : int, optional
            Overrides the optimiser and tuner seeds.
        out : str, optional
            Overrides the output directory.
        write : bool
            Write the leg table, the tour record and the profiles.

        Returns
        -------
        dict
            The plan summary, plus ``files`` when outputs were written.

        Raises
        ------
        TourInfeasibleError
            When the optimiser finds no feasible tour.
        """
        mission = resolve_config(config, objective, seed, out)
        definition = mission.definition(resolve_catalog(catalog))
        logger.info("planning a %s-optimal tour of %d debris", definition.objective,
                    len(definition.debris))
        solution, _ = self.optimizer(definition, mission.initial_guess(definition),
                                     mission.optimizer)
        summary = plan_summary(solution, definition.env)
        logger.info("planned tour: %.2f m/s, %.2f d, %.2f kg", summary["dv_m_s"],
                    summary["tof_days"], summary["fuel_kg"])
        if write:
            summary["files"] = self.write(solution, mission)
        return summary

    @staticmethod
    def write(solution: TourSolution, mission) -> Dict[str, str]:
        directory = output_dir(mission)
        solution.to_json(directory / SOLUTION_FILE)
        solution.to_csv(directory / LEGS_FILE)
        profiles = directory / PROFILE_DIR
        profiles.mkdir(exist_ok=True)
        for n, leg in enumerate(solution.legs, 1):
            for k, segment in enumerate(leg.segments, 1):
                segment.to_csv(profiles / f"{n:02d}_{leg.kind}_{k}_{segment.kind}.csv")
        return {"solution": str(directory / SOLUTION_FILE), "legs": str(directory / LEGS_FILE),
                "profiles": str(profiles)}


plan_tour = PlanTour()
