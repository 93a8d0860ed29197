"""
Tune use case: swarm-tune the guidance weights of a planned tour.
"""
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..config.mission import dump_weights
from ..guidance.weights import LAWS
from ..propagator.config import OPEN_LOOP
from ..tour.solution import TourSolution
from ..tuner.tune import TuningProblem, WeightTuner, tune_weights
from .common import (SOLUTION_FILE, WEIGHTS_FILE, ConfigSource, output_dir, resolve_config,
                     resolve_laws, write_rows)

logger = logging.getLogger(__name__)

WEIGHTS_HEADER = ("Leg", "c1", "c2", "c3", "c4", "c5")


class TuneWeights:
    """
    Tunes one law, or every guidance law with ``all`` or when the configured law is open
    loop, and writes the weight tables.
    """

    def __init__(self, tuner: Optional[WeightTuner] = None):
        self.tuner = tuner or tune_weights

    def __call__(self, config: ConfigSource, solution: Optional[Union[str, Path]] = None,
                 law: Optional[str] = None, seed: Optional[int] = None,
                 swarm_size: Optional[int] = None, iterations: Optional[int] = None,
                 out: Optional[str] = None, write: bool = True) -> Dict[str, Any]:
        """
        Returns
        -------
        dict
            Per law: best fitness, unit-weight baseline, history and the weight table rows.
        """
        mission = resolve_config(config, seed=seed, out=out)
        path = Path(solution) if solution else Path(mission.output_dir) / SOLUTION_FILE
        tour = TourSolution.from_json(path)
        settings = mission.tuner
        laws = [name for name in resolve_laws(law, mission.guidance.law) if name != OPEN_LOOP]
        if not laws:
            laws = list(LAWS)

        results: Dict[str, Any] = {}
        tuned = []
        for name in laws:
            problem = TuningProblem(name, tour, mission.spacecraft, mission.environment,
                                    settings.dynamics)
            result = self.tuner(problem, swarm_size=swarm_size or settings.swarm_size,
                                iterations=iterations or settings.iterations,
                                seed=settings.seed, settings=settings.swarm)
            tuned.append(result.weights)
            results[name] = {**result.to_dict(), "rows": result.rows(tour)}

        summary: Dict[str, Any] = {"laws": results}
        if write and tuned:
            directory = output_dir(mission)
            dump_weights(tuned, directory / WEIGHTS_FILE)
            files = {"weights": str(directory / WEIGHTS_FILE)}
            for name, result in results.items():
                table = directory / f"weights_{name}.csv"
                write_rows(table, WEIGHTS_HEADER, result["rows"])
                files[name] = str(table)
            summary["files"] = files
        return summary


tune_mission = TuneWeights()
