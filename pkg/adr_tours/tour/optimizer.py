"""
Constrained tour optimisation over the drift orbits (and optionally the launch epoch).

Classes
-------
OptimizerOptions : Multistart, penalty and poll settings.
TourOptimizer : Callable running penalty Nelder-Mead multistarts and a final pattern poll.

Dependencies
------------
- numpy
- scipy.optimize (Nelder-Mead with bounds)
"""
import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize

from ..errors import ConfigError, TourInfeasibleError
from .definition import TourDefinition
from .evaluator import FitnessResult, TourEvaluator, evaluate_tour, tour_fitness
from .solution import TourSolution

logger = logging.getLogger(__name__)

FAILED_FITNESS = 1e6


@dataclass(frozen=True)
class OptimizerOptions:
    """
    Attributes
    ----------
    multistarts : int
        Number of Nelder-Mead starts; the first is ``x0``, the rest are drawn uniformly in
        the box.
    seed : int
        Seed of the start-point generator.
    penalty_weight : float
        Weight of the squared relative constraint violation.
    max_evaluations : int
        Function evaluations per Nelder-Mead start.
    initial_poll_step, poll_step : float
        First and final step of the pattern poll, in box-scaled units.
    search_segments : int, optional
        Edelbaum segments per arc during the search; the optimum is re-evaluated with the
        definition's own setting.
    resolution_tolerance : float
        Relative constraint excess tolerated when the optimum is re-evaluated with the
        definition's segment count.
    """
    multistarts: int = 8
    seed: int = 0
    penalty_weight: float = 1e3
    max_evaluations: int = 150
    initial_poll_step: float = 0.05
    poll_step: float = 1e-3
    search_segments: Optional[int] = 200
    resolution_tolerance: float = 1e-3

    def __post_init__(self):
        if self.multistarts < 1:
            raise ConfigError("multistarts must be at least 1")
        if not 0.0 < self.poll_step <= self.initial_poll_step:
            raise ConfigError("poll steps must satisfy 0 < poll_step <= initial_poll_step")
        if self.max_evaluations < 1:
            raise ConfigError("max_evaluations must be at least 1")


class _Cache:
    """Memoised fitness of unit-box points."""

    def __init__(self, definition: TourDefinition, evaluator: TourEvaluator,
                 n_segments: Optional[int]):
        self.definition = definition
        self.layout = definition.layout()
        self.evaluator = evaluator
        self.n_segments = n_segments
        self.results: Dict[Tuple[float, ...], FitnessResult] = {}

    def key(self, u: Sequence[float]) -> Tuple[float, ...]:
        return tuple(np.round(np.clip(np.asarray(u, dtype=float), 0.0, 1.0), 12).tolist())

    def __call__(self, u: Sequence[float]) -> FitnessResult:
        key = self.key(u)
        if key not in self.results:
            x = self.layout.from_unit(key)
            self.results[key] = tour_fitness(self.definition, x, self.n_segments, self.evaluator)
        return self.results[key]

    def best_feasible(self) -> Optional[Tuple[Tuple[float, ...], FitnessResult]]:
        feasible = [(r.objective, key, r) for key, r in self.results.items() if r.feasible]
        if not feasible:
            return None
        objective, key, result = min(feasible, key=lambda item: (item[0], item[1]))
        return key, result

    def least_violation(self) -> float:
        violations = [r.violation for r in self.results.values()]
        return min(violations) if violations else math.inf


class TourOptimizer:
    """
    Local constrained search.

    Each start runs a bounded Nelder-Mead on the objective plus an exterior quadratic
    penalty. The best feasible point over all starts (ties broken by the lexicographically
    smallest vector) is then refined by a compass poll which halves its step down to
    ``poll_step`` and stops once no feasible neighbour improves the objective.
    """

    def __init__(self, evaluator: Optional[TourEvaluator] = None):
        self.evaluator = evaluator or evaluate_tour

    def __call__(self, definition: TourDefinition, x0: Sequence[float] = (),
                 options: Optional[OptimizerOptions] = None) -> Tuple[TourSolution, np.ndarray]:
        """
        Optimise a tour.

        Returns
        -------
        tuple of (TourSolution, np.ndarray)
            Solution evaluated with the definition's segment count and the optimal vector.

        Raises
        ------
        TourInfeasibleError
            When no evaluated point satisfies the constraint.
        ConfigError
            When ``x0`` has the wrong size or lies outside the box.
        """
        opts = options or OptimizerOptions()
        layout = definition.layout()
        x0 = np.asarray(x0, dtype=float)
        if x0.size != layout.size:
            raise ConfigError(f"x0 has {x0.size} entries, expected {layout.size}")
        if layout.size == 0:
            return self._finish(definition, x0)
        if not layout.contains(x0):
            raise ConfigError("x0 lies outside the decision bounds")

        cache = _Cache(definition, self.evaluator, opts.search_segments)
        rng = np.random.default_rng(opts.seed)
        starts = [layout.to_unit(x0)]
        starts.extend(rng.uniform(0.0, 1.0, size=(opts.multistarts - 1, layout.size)))

        def penalised(u):
            result = cache(u)
            if result.solution is None:
                return FAILED_FITNESS
            return result.objective + opts.penalty_weight * result.violation ** 2

        bounds = [(0.0, 1.0)] * layout.size
        for n, start in enumerate(starts):
            res = minimize(penalised, start, method="Nelder-Mead", bounds=bounds,
                           options={"maxfev": opts.max_evaluations, "xatol": 1e-4,
                                    "fatol": 1e-9})
            logger.info("multistart %d/%d: penalised fitness %.6g after %d evaluations",
                        n + 1, len(starts), res.fun, res.nfev)

        best = cache.best_feasible()
        if best is None:
            violation = cache.least_violation()
            raise TourInfeasibleError(
                f"no feasible tour found in {len(cache.results)} evaluations", violation)
        u_best = self._poll(cache, np.array(best[0]), best[1].objective, opts)
        return self._finish(definition, layout.from_unit(u_best), opts.resolution_tolerance)

    @staticmethod
    def _poll(cache: _Cache, u: np.ndarray, objective: float,
              opts: OptimizerOptions) -> np.ndarray:
        step = opts.initial_poll_step
        while True:
            improved = False
            for trial in pattern_neighbours(u, step):
                result = cache(trial)
                if result.feasible and result.objective < objective:
                    u, objective, improved = trial, result.objective, True
                    break
            if improved:
                continue
            if step <= opts.poll_step:
                break
            step = max(0.5 * step, opts.poll_step)
        logger.info("pattern poll converged: objective %.6g", objective)
        return u

    def _finish(self, definition: TourDefinition, x: np.ndarray,
                tolerance: float = 0.0) -> Tuple[TourSolution, np.ndarray]:
        solution = self.evaluator(definition, x)
        violation = solution.constraint_violation()
        if violation > tolerance:
            raise TourInfeasibleError("tour violates its constraint", violation)
        if violation > 0.0:
            logger.warning("constraint exceeded by %.2e (relative) at full resolution", violation)
        return solution, np.asarray(x, dtype=float)


optimize_tour = TourOptimizer()


def pattern_neighbours(u: Sequence[float], step: float) -> List[np.ndarray]:
    """Compass neighbours of ``u`` clipped to the unit box (duplicates of ``u`` dropped)."""
    u = np.asarray(u, dtype=float)
    out = []
    for k in range(u.size):
        for direction in (1.0, -1.0):
            trial = u.copy()
            trial[k] = min(1.0, max(0.0, trial[k] + direction * step))
            if trial[k] != u[k]:
                out.append(trial)
    return out
