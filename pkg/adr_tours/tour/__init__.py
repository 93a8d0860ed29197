"""Multi-debris tour assembly and constrained optimisation."""
from .definition import DAY, DebrisTarget, DecisionLayout, TourDefinition
from .evaluator import FitnessResult, TourEvaluator, evaluate_tour, tour_fitness
from .optimizer import OptimizerOptions, TourOptimizer, optimize_tour
from .solution import TourLeg, TourSolution, leg_labels, rocket_fuel

__all__ = [
    "DAY", "DebrisTarget", "DecisionLayout", "FitnessResult", "OptimizerOptions",
    "TourDefinition", "TourEvaluator", "TourLeg", "TourOptimizer", "TourSolution",
    "evaluate_tour", "leg_labels", "optimize_tour", "rocket_fuel", "tour_fitness",
]
