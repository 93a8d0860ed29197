"""Swarm tuning of guidance weights in simplified dynamics."""
from .fitness import ABORT_FITNESS, SimplifiedSettings, legs_fitness, simplified_leg_fitness
from .swarm import Swarm, SwarmResult, SwarmSettings, split_vector
from .tune import TuningProblem, TuningResult, WeightTuner, tune_weights

__all__ = [
    "ABORT_FITNESS", "SimplifiedSettings", "Swarm", "SwarmResult", "SwarmSettings",
    "TuningProblem", "TuningResult", "WeightTuner", "legs_fitness", "simplified_leg_fitness",
    "split_vector", "tune_weights",
]
