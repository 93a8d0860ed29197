import math

import numpy as np
import pytest

from adr_tours.astro.elements import ClassicalElements
from adr_tours.guidance import (DvLawWeights, QLawWeights, RuggieroWeights, TargetState,
                                dvlaw, gve_matrix, qlaw, ruggiero)
from adr_tours.guidance.ruggiero import element_directions

F = 7.5e-8


def _offset(rng, low, high):
    return rng.choice((-1.0, 1.0)) * rng.uniform(low, high)


def _random_case(rng):
    """Near-circular state and a target separated from it in every element."""
    e = rng.uniform(0.001, 0.04)
    el = ClassicalElements(rng.uniform(6700.0, 7800.0), e, rng.uniform(0.3, 2.8),
                           rng.uniform(0.0, 2.0 * math.pi), rng.uniform(0.0, 2.0 * math.pi),
                           rng.uniform(0.0, 2.0 * math.pi))
    e_gap = rng.uniform(0.005, 0.02)
    target = TargetState(el.a + _offset(rng, 5.0, 300.0),
                         e + e_gap if rng.random() < 0.5 or e_gap > e else e - e_gap,
                         el.i + _offset(rng, 0.005, 0.05),
                         el.raan + _offset(rng, 0.01, 0.2))
    return el, target


def _dvlaw_weights(rng):
    return DvLawWeights(lambda_e1=rng.uniform(0.05, 1.0), lambda_e2=rng.uniform(0.0, 1.0),
                        lambda_ai=rng.uniform(0.1, 2.0), lambda_ei=rng.uniform(0.1, 1.0),
                        lambda_araan=rng.uniform(0.001, 0.1))


def _qlaw_weights(rng):
    return QLawWeights(w_a=rng.uniform(0.1, 2.0), w_e=rng.uniform(0.1, 2.0),
                       w_i=rng.uniform(0.1, 2.0), w_raan=rng.uniform(0.1, 2.0))


def _unit_directions(rng, n):
    v = rng.normal(size=(3, n))
    return v / np.linalg.norm(v, axis=0)


LYAPUNOV_LAWS = [(dvlaw, _dvlaw_weights), (qlaw, _qlaw_weights)]


def _check_lyapunov_descent(env, law, draw_weights, n_cases, n_directions, seed):
    rng = np.random.default_rng(seed)
    directions = _unit_directions(rng, n_directions)
    for _ in range(n_cases):
        el, target = _random_case(rng)
        weights = draw_weights(rng)
        grad = law.gradient(el, target, weights, env, F)
        slope = grad @ gve_matrix(el, env).matrix
        u = law(el, target, weights, env, F)

        assert u.active
        descent = slope @ u.vector
        assert descent <= 0.0
        assert descent <= np.min(slope @ directions) + 1e-9 * np.linalg.norm(slope)


@pytest.mark.parametrize("law, draw_weights", LYAPUNOV_LAWS)
def test_lyapunov_direction_is_steepest_descent(env, law, draw_weights):
    _check_lyapunov_descent(env, law, draw_weights, n_cases=200, n_directions=10_000, seed=11)


@pytest.mark.slow
@pytest.mark.parametrize("law, draw_weights", LYAPUNOV_LAWS)
def test_lyapunov_direction_is_steepest_descent_exhaustive(env, law, draw_weights):
    _check_lyapunov_descent(env, law, draw_weights, n_cases=10_000, n_directions=10_000,
                            seed=12)


@pytest.mark.parametrize("law, draw_weights", LYAPUNOV_LAWS)
def test_gradient_is_step_independent(env, monkeypatch, law, draw_weights):
    rng = np.random.default_rng(21)
    cases = [(*_random_case(rng), draw_weights(rng)) for _ in range(200)]
    fine = [law.gradient(el, target, w, env, F) for el, target, w in cases]
    fine_dirs = [law(el, target, w, env, F).vector for el, target, w in cases]

    monkeypatch.setattr("adr_tours.guidance.base.FD_RELATIVE_STEP", 2e-6)

    for (el, target, w), g, u in zip(cases, fine, fine_dirs):
        doubled = law.gradient(el, target, w, env, F)
        assert np.linalg.norm(doubled - g) <= 1e-3 * np.linalg.norm(g)
        np.testing.assert_allclose(law(el, target, w, env, F).vector, u, atol=1e-3)


def test_ruggiero_element_directions_are_locally_optimal(env):
    rng = np.random.default_rng(31)
    directions = _unit_directions(rng, 10_000)
    for _ in range(200):
        el, target = _random_case(rng)
        rows = gve_matrix(el, env).matrix
        toward = (np.sign(target.a - el.a), np.sign(target.e - el.e),
                  np.sign(target.i - el.i), np.sign(-math.sin(el.raan - target.raan)))
        for k, (direction, _) in enumerate(element_directions(el, target, env)):
            gain = toward[k] * rows[k]
            np.testing.assert_allclose(direction, gain / np.linalg.norm(gain), atol=1e-9)
            assert gain @ direction >= np.max(gain @ directions) - 1e-12 * np.linalg.norm(gain)


def test_ruggiero_blend_makes_weighted_progress(env):
    rng = np.random.default_rng(41)
    weights = RuggieroWeights(w_a=1.0, w_e=1.0, w_i=1.0, w_raan=1.0)
    for _ in range(200):
        el, target = _random_case(rng)
        distances = (abs(el.a - target.a), abs(el.e - target.e), abs(el.i - target.i),
                     abs(math.remainder(el.raan - target.raan, 2.0 * math.pi)))
        blend = sum(w * d * t for w, d, (t, _) in zip(
            weights.as_array(), distances, element_directions(el, target, env)))
        u = ruggiero(el, target, weights, env)

        assert u.active
        assert blend @ u.vector == pytest.approx(np.linalg.norm(blend))
