import math
from types import SimpleNamespace

import numpy as np
import pytest

from adr_tours.astro.elements import ClassicalElements
from adr_tours.errors import ConfigError, TourInfeasibleError
from adr_tours.tour.definition import DebrisTarget, TourDefinition
from adr_tours.tour.optimizer import OptimizerOptions, TourOptimizer, pattern_neighbours

RE = 6378.137
OPTIMUM = np.array([0.3, 0.7])


class BowlEvaluator:
    """Objective (u - OPTIMUM)^2 in unit coordinates, violation fixed."""

    def __init__(self, violation=0.0):
        self.violation = violation
        self.calls = 0

    def __call__(self, definition, x, n_segments=None):
        self.calls += 1
        u = definition.layout().to_unit(x)
        value = float(np.sum((u - OPTIMUM) ** 2))
        return SimpleNamespace(dv=value, tof=86400.0, x=tuple(x),
                               constraint_violation=lambda: self.violation)


@pytest.fixture
def definition(env, servicer):
    debris = tuple(DebrisTarget(name, ClassicalElements.circular(RE + 600.0, math.radians(98.0)),
                                100.0) for name in ("A", "B"))
    return TourDefinition(debris, servicer, env)


def test_finds_the_bowl_minimum(definition):
    optimizer = TourOptimizer(BowlEvaluator())
    layout = definition.layout()
    options = OptimizerOptions(multistarts=2, max_evaluations=200, poll_step=1e-4)
    _, x = optimizer(definition, layout.from_unit([0.5, 0.5]), options)
    np.testing.assert_allclose(layout.to_unit(x), OPTIMUM, atol=2e-3)


def test_same_seed_same_answer(definition):
    layout = definition.layout()
    options = OptimizerOptions(multistarts=3, max_evaluations=40, seed=7)
    _, first = TourOptimizer(BowlEvaluator())(definition, layout.from_unit([0.9, 0.1]), options)
    _, second = TourOptimizer(BowlEvaluator())(definition, layout.from_unit([0.9, 0.1]), options)
    np.testing.assert_array_equal(first, second)


def test_infeasible_everywhere(definition):
    optimizer = TourOptimizer(BowlEvaluator(violation=0.5))
    with pytest.raises(TourInfeasibleError) as info:
        optimizer(definition, definition.layout().from_unit([0.5, 0.5]),
                  OptimizerOptions(multistarts=1, max_evaluations=10))
    assert info.value.best_violation == pytest.approx(0.5)
    assert info.value.exit_code == 3


def test_start_must_fit_the_box(definition):
    optimizer = TourOptimizer(BowlEvaluator())
    with pytest.raises(ConfigError):
        optimizer(definition, [1.0])
    with pytest.raises(ConfigError):
        optimizer(definition, [100.0, 100.0])


def test_pattern_neighbours_stay_in_the_box():
    neighbours = pattern_neighbours([0.0, 0.5], 0.1)
    assert all(np.all((n >= 0.0) & (n <= 1.0)) for n in neighbours)
    assert len(neighbours) == 3
