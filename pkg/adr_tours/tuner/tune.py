"""
Swarm tuning of per-direction guidance weights for one law over a planned tour.

Classes
-------
TuningProblem : Law, reference tour and the simplified dynamics it is tuned in.
TuningResult : Best LegWeights, fitness history and the unit-weight baseline.
WeightTuner : Callable running the swarm over the ten-slot (down, up) vector.

Dependencies
------------
- numpy
"""
import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ..astro.environment import Environment, SpacecraftConfig
from ..errors import ConfigError
from ..guidance.weights import (LAWS, PINNED_SLOTS, VECTOR_SIZE, LegWeights, default_weights,
                                weights_from_vector)
from ..tour.solution import TourLeg, TourSolution
from .fitness import SimplifiedSettings, legs_fitness
from .swarm import Swarm, SwarmSettings, split_vector

logger = logging.getLogger(__name__)

DOWN_KINDS = ("deorbit", "handover")


@dataclass(frozen=True)
class TuningProblem:
    """
    Attributes
    ----------
    law : str
        One of ``ruggiero``, ``dvlaw`` or ``qlaw``.
    solution : TourSolution
        Planned tour whose transfer legs are the references.
    sc : SpacecraftConfig
    env : Environment
    settings : SimplifiedSettings
    """
    law: str
    solution: TourSolution
    sc: SpacecraftConfig
    env: Environment
    settings: SimplifiedSettings = field(default_factory=SimplifiedSettings)

    def __post_init__(self):
        if self.law not in LAWS:
            raise ConfigError(f"cannot tune law {self.law!r}; expected one of {LAWS}")

    @property
    def legs(self) -> List[TourLeg]:
        return self.solution.transfer_legs()

    @property
    def pinned(self) -> List[int]:
        slots = PINNED_SLOTS[self.law]
        return [*slots, *(s + VECTOR_SIZE for s in slots)]

    @property
    def lower(self) -> np.ndarray:
        return np.zeros(2 * VECTOR_SIZE)

    @property
    def upper(self) -> np.ndarray:
        return np.ones(2 * VECTOR_SIZE)

    def weights(self, x: Sequence[float]) -> LegWeights:
        down, up = split_vector(x, VECTOR_SIZE)
        return LegWeights(self.law, weights_from_vector(self.law, down),
                          weights_from_vector(self.law, up))

    def pin(self, x: Sequence[float]) -> np.ndarray:
        """``x`` with the pinned slots set to zero."""
        x = np.array(x, dtype=float)
        x[self.pinned] = 0.0
        return x

    def fitness(self, x: Sequence[float]) -> float:
        return legs_fitness(self.weights(x), self.legs, self.law, self.sc, self.env,
                            self.settings)

    def class_fitness(self, x: Sequence[float]) -> Dict[str, float]:
        """Fitness split into the downward and upward leg classes."""
        weights = self.weights(x)
        down = [leg for leg in self.legs if leg.kind in DOWN_KINDS]
        up = [leg for leg in self.legs if leg.kind not in DOWN_KINDS]
        return {
            "down": legs_fitness(weights, down, self.law, self.sc, self.env, self.settings),
            "up": legs_fitness(weights, up, self.law, self.sc, self.env, self.settings),
        }


@dataclass(frozen=True, eq=False)
class TuningResult:
    weights: LegWeights
    x: np.ndarray
    fitness: float
    baseline_fitness: float
    history: List[float] = field(default_factory=list)
    evaluations: int = 0

    def rows(self, solution: TourSolution) -> List[List[str]]:
        """Per transfer leg: leg number and the five coefficients."""
        kinds = [leg.kind for leg in solution.transfer_legs()]
        return [[str(n)] + [f"{v:.6g}" for v in vector]
                for n, vector in self.weights.table(kinds)]

    def to_dict(self) -> Dict[str, Any]:
        return {"law": self.weights.law, "fitness": self.fitness,
                "baseline_fitness": self.baseline_fitness, "history": list(self.history),
                "evaluations": self.evaluations, "weights": self.weights.to_dict()}


class WeightTuner:
    """
    Minimises the simplified tracking fitness over [0, 1]^10.

    Particle 0 is the law's default weights for the tour objective and particle 1 the
    unit vector; pinned slots are zero in every particle.
    """

    def __call__(self, problem: TuningProblem, swarm_size: int = 50, iterations: int = 40,
                 seed: Optional[int] = 0, x0: Optional[Sequence[float]] = None,
                 settings: Optional[SwarmSettings] = None) -> TuningResult:
        if iterations < 1:
            raise ConfigError("iterations must be at least 1")
        swarm_settings = replace(settings or SwarmSettings(), size=swarm_size,
                                 iterations=iterations, seed=seed)
        if x0 is None:
            objective = problem.solution.objective
            defaults = default_weights(problem.law, objective if objective else "fuel")
            x0 = np.concatenate((defaults.down.to_vector(), defaults.up.to_vector()))
        start = problem.pin(np.clip(x0, problem.lower, problem.upper))
        unit = problem.pin(np.ones(2 * VECTOR_SIZE))

        logger.info("tuning %s weights over %d legs: %d particles, %d iterations", problem.law,
                    len(problem.legs), swarm_size, iterations)
        result = Swarm(swarm_settings)(problem.fitness, problem.lower, problem.upper, x0=start,
                                       seeds=[unit], pinned=problem.pinned)
        baseline = problem.fitness(unit)
        logger.info("tuned %s: fitness %.6g (unit weights %.6g)", problem.law, result.fitness,
                    baseline)
        return TuningResult(problem.weights(result.x), result.x, result.fitness, baseline,
                            result.history, result.evaluations)


tune_weights = WeightTuner()
