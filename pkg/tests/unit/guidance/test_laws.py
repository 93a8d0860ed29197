import math

import numpy as np
import pytest

from adr_tours.astro.elements import ClassicalElements
from adr_tours.errors import ConfigError
from adr_tours.guidance import (DvLawWeights, QLawWeights, RuggieroWeights, TargetState,
                                ThrustDirection, dvlaw, get_law, gve_matrix, qlaw, ruggiero)
from adr_tours.guidance.dvlaw import dvlaw_scalar
from adr_tours.guidance.qlaw import qlaw_scalar

F = 7.5e-8


@pytest.fixture
def below():
    return ClassicalElements(7000.0, 0.0, math.radians(98.0), 0.0, 0.0, 0.3)


@pytest.mark.parametrize("law, weights", [(dvlaw, DvLawWeights()), (qlaw, QLawWeights())])
def test_lyapunov_laws_descend(env, below, law, weights):
    target = TargetState(7100.0, 0.0, math.radians(98.3), math.radians(0.5))
    direction = law(below, target, weights, env, F)
    grad = law.gradient(below, target, weights, env, F)
    rate = gve_matrix(below, env).rates(direction.vector)
    assert direction.active
    assert grad @ rate < 0.0
    assert np.linalg.norm(direction.vector) == pytest.approx(1.0)


@pytest.mark.parametrize("law, weights", [(ruggiero, RuggieroWeights()),
                                          (dvlaw, DvLawWeights()), (qlaw, QLawWeights())])
def test_raising_thrusts_along_track(env, below, law, weights):
    target = TargetState(7100.0, 0.0, below.i, below.raan)
    direction = law(below, target, weights, env, F)
    assert direction.vector[1] > 0.99
    assert direction.vector[2] == pytest.approx(0.0, abs=1e-6)
    lowering = law(below, TargetState(6900.0, 0.0, below.i, below.raan), weights, env, F)
    assert lowering.vector[1] < -0.99


def test_ruggiero_inclination_push(env, below):
    target = TargetState(below.a, 0.0, below.i + 0.01, below.raan)
    direction = ruggiero(below, target, RuggieroWeights(), env)
    np.testing.assert_allclose(direction.vector, [0.0, 0.0, 1.0], atol=1e-12)


def test_ruggiero_efficiency_gate(env, below):
    target = TargetState(below.a, 0.0, below.i + 0.01, below.raan)
    # |cos u| is about 0.955 at u = 0.3 rad
    gated = ruggiero(below, target, RuggieroWeights(thresholds=(0.0, 0.0, 0.99, 0.0)), env)
    assert not gated.active
    assert np.all(gated.vector == 0.0)


def test_on_target_scalars_vanish(env, below):
    target = TargetState.from_elements(below)
    assert dvlaw_scalar(below.a, 0.0, below.i, below.raan, 0.0, target, DvLawWeights(), env,
                        circular=True) == pytest.approx(0.0, abs=1e-12)
    assert qlaw_scalar(below.a, 0.0, below.i, below.raan, 0.0, target, QLawWeights(), F,
                       env) == pytest.approx(0.0, abs=1e-12)
    assert not ruggiero(below, target, RuggieroWeights(), env).active


def test_gve_on_an_equatorial_orbit(env):
    b = gve_matrix(ClassicalElements(7000.0, 0.0, 0.0), env)
    assert b.matrix.shape == (4, 3)
    assert not b.raan_available
    assert np.all(b.matrix[3] == 0.0)


def test_semi_major_axis_rate_on_a_circle(env):
    el = ClassicalElements(7000.0, 0.0, 1.0)
    rates = gve_matrix(el, env).rates([0.0, F, 0.0])
    assert rates[0] == pytest.approx(2.0 * F * math.sqrt(7000.0 ** 3 / env.mu))


def test_target_errors_take_the_short_way_round():
    target = TargetState(7000.0, 0.0, 1.0, math.radians(1.0))
    el = ClassicalElements(7010.0, 0.0, 1.1, math.radians(359.0))
    da, di, draan = target.errors(el)
    assert da == pytest.approx(10.0)
    assert di == pytest.approx(0.1)
    assert draan == pytest.approx(math.radians(-2.0))


def test_inactive_direction():
    assert not ThrustDirection.from_raw(np.zeros(3)).active
    assert ThrustDirection.from_raw(np.array([0.0, 3.0, 4.0])).vector[2] == pytest.approx(0.8)


def test_law_lookup():
    assert get_law("qlaw") is qlaw
    with pytest.raises(ConfigError):
        get_law("open_loop")
