import math
from unittest.mock import MagicMock

import numpy as np
import pytest

from adr_tours.astro.elements import ClassicalElements
from adr_tours.edelbaum.classical import EdelbaumBoundary
from adr_tours.edelbaum.extended import ExtendedEdelbaumOptions, extended_edelbaum
from adr_tours.errors import ConfigError
from adr_tours.guidance.weights import DvLawWeights, default_weights
from adr_tours.raan_match.drift import DriftOrbit, drift_profile
from adr_tours.tour.solution import TourLeg
from adr_tours.tuner import ABORT_FITNESS, TuningProblem, tune_weights
from adr_tours.tuner.fitness import legs_fitness, simplified_leg_fitness

RE = 6378.137


@pytest.fixture
def raise_leg(vacuum, servicer):
    start = ClassicalElements.circular(RE + 700.0, math.radians(98.0))
    b = EdelbaumBoundary.from_orbits(start.a, start.a + 10.0, start.i, start.i, vacuum)
    profile = extended_edelbaum(b, servicer, vacuum, 20,
                                options=ExtendedEdelbaumOptions(drag=False, eclipses=False))
    end = profile.end()
    return TourLeg("rendezvous", "Leg 2", "B", (profile,), 800.0, end.mass, 0.0,
                   ClassicalElements.circular(end.a, end.i, end.raan, epoch=end.t), 2)


@pytest.fixture
def problem(vacuum, servicer):
    return TuningProblem("qlaw", MagicMock(objective="fuel"), servicer, vacuum)


def test_simplified_leg_tracks_its_reference(vacuum, servicer, raise_leg):
    fitness = simplified_leg_fitness(DvLawWeights(), raise_leg, "dvlaw", servicer, vacuum)
    assert 0.0 <= fitness < 1.0
    weights = default_weights("dvlaw")
    assert legs_fitness(weights, [raise_leg], "dvlaw", servicer, vacuum) == pytest.approx(
        simplified_leg_fitness(weights.up, raise_leg, "dvlaw", servicer, vacuum))


def test_propellant_exhaustion_aborts(vacuum, servicer, raise_leg):
    starved = TourLeg("rendezvous", "Leg 2", "B", raise_leg.segments, 400.0001, 400.0, 0.0,
                      raise_leg.end_elements, 2)
    assert simplified_leg_fitness(DvLawWeights(), starved, "dvlaw", servicer, vacuum) \
        == ABORT_FITNESS


def test_dwells_are_not_scored(vacuum, servicer):
    orbit = DriftOrbit.from_radius(RE + 350.0, 1.7, vacuum)
    dwell = drift_profile(orbit, 0.0, 86400.0, 0.0, servicer, vacuum, mass0=800.0, n_samples=3,
                          kind="dwell")
    leg = TourLeg("handover", "Handover", "A", (dwell,), 800.0, 800.0, 0.0,
                  ClassicalElements.circular(RE + 350.0, 1.7))
    assert legs_fitness(default_weights("qlaw"), [leg], "qlaw", servicer, vacuum) == 0.0


def test_pinned_slots_of_both_halves(problem, vacuum, servicer):
    assert problem.pinned == [1, 4, 6, 9]
    np.testing.assert_array_equal(problem.pin(np.ones(10)), [1, 0, 1, 1, 0, 1, 0, 1, 1, 0])
    assert TuningProblem("dvlaw", problem.solution, servicer, vacuum).pinned == []
    weights = problem.weights(np.arange(10) / 10.0)
    assert weights.down.w_a == 0.0 and weights.up.w_a == 0.5


def test_open_loop_cannot_be_tuned(vacuum, servicer):
    with pytest.raises(ConfigError):
        TuningProblem("open_loop", MagicMock(), servicer, vacuum)


def test_tuner_keeps_pins_and_beats_unit_weights(problem, monkeypatch):
    monkeypatch.setattr(TuningProblem, "fitness",
                        lambda self, x: float(np.sum((np.asarray(x) - 0.2) ** 2)))
    result = tune_weights(problem, swarm_size=6, iterations=4, seed=5)
    assert np.all(result.x[problem.pinned] == 0.0)
    assert result.fitness <= result.baseline_fitness
    assert result.evaluations == 24
    assert result.to_dict()["law"] == "qlaw"


def test_tuner_iterations(problem):
    with pytest.raises(ConfigError):
        tune_weights(problem, iterations=0)
