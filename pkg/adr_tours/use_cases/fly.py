"""
Fly use case: propagate a planned tour under one law or all of them.

Classes
-------
FlyTour : Callable flying a stored tour and writing per-law logs and the comparison table.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from ..errors import PropagationAbortError
from ..propagator.config import OPEN_LOOP
from ..propagator.tour import COMPARISON_HEADER, TourFlight, TourFlyer, fly_tour
from ..tour.solution import TourSolution
from .common import (COMPARISON_FILE, SOLUTION_FILE, ConfigSource, fly_errors_file,
                     fly_summary_file, output_dir, resolve_config, resolve_laws, write_rows)

logger = logging.getLogger(__name__)

ERROR_HEADER = ("Leg", "Delta a (km)", "Delta i (deg)", "Delta RAAN (deg)")


class FlyTour:
    """
    Propagates every transfer leg of a stored tour.

    With several laws an abort in one law is recorded in its summary and the others still
    fly; the abort is raised once every law has been tried.
    """

    def __init__(self, flyer: Optional[TourFlyer] = None):
        self.flyer = flyer or fly_tour

    def __call__(self, config: ConfigSource, solution: Optional[Union[str, Path]] = None,
                 law: Optional[str] = None, legs: Optional[Sequence[int]] = None,
                 out: Optional[str] = None, write: bool = True,
                 **settings) -> Dict[str, Any]:
        """
        Parameters
        ----------
        config : MissionConfig, mapping or path
        solution : path, optional
            Tour record written by ``plan``; defaults to the one in the output directory.
        law : str, optional
            ``ruggiero``, ``dvlaw``, ``qlaw``, ``openloop`` or ``all``; defaults to the
            configured law.
        legs : sequence of int, optional
            Transfer legs to fly.
        settings
            PropagationConfig overrides, e.g. ``control_step``.

        Raises
        ------
        PropagationAbortError
            When a leg aborts.
        """
        mission = resolve_config(config, out=out)
        path = Path(solution) if solution else Path(mission.output_dir) / SOLUTION_FILE
        tour = TourSolution.from_json(path)
        propagation = {**mission.guidance.propagation, **settings}
        laws = resolve_laws(law, mission.guidance.law)

        flights: List[TourFlight] = []
        results: List[Dict[str, Any]] = []
        aborts: List[PropagationAbortError] = []
        for name in laws:
            weights = None if name == OPEN_LOOP \
                else mission.guidance.weights_for(name, tour.objective)
            try:
                flight = self.flyer(tour, name, mission.spacecraft, mission.environment,
                                    weights=weights, legs=None if legs is None else list(legs),
                                    **propagation)
            except PropagationAbortError as exc:
                logger.warning("%s aborted on leg %s: %s", name, exc.leg_index, exc)
                aborts.append(exc)
                results.append({"law": name, "aborted": str(exc), "leg": exc.leg_index})
                continue
            flights.append(flight)
            results.append(flight.summary())

        summary: Dict[str, Any] = {"flights": results,
                                   "comparison": [flight.comparison_row()
                                                  for flight in flights]}
        if write:
            summary["files"] = self.write(mission, flights, results)
        if aborts:
            raise aborts[0]
        return summary

    @staticmethod
    def write(mission, flights: Sequence[TourFlight],
              results: Sequence[Dict[str, Any]]) -> Dict[str, str]:
        directory = output_dir(mission)
        files: Dict[str, str] = {}
        for result in results:
            with open(directory / fly_summary_file(result["law"]), "w", encoding="utf-8") as f:
                json.dump(result, f, indent=2)
        for flight in flights:
            write_rows(directory / fly_errors_file(flight.law), ERROR_HEADER,
                       flight.error_rows())
            for log in flight.logs:
                log.to_csv(directory / f"fly_{flight.law}_leg{log.leg_index}.csv")
            files[flight.law] = str(directory / fly_summary_file(flight.law))
        if flights:
            write_rows(directory / COMPARISON_FILE, COMPARISON_HEADER,
                       [flight.comparison_row() for flight in flights])
            files["comparison"] = str(directory / COMPARISON_FILE)
        return files


fly_mission = FlyTour()
