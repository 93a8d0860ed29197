import math

import pytest

from adr_tours.astro.elements import (ClassicalElements, cartesian_to_elements,
                                      elements_to_cartesian, mean_to_true, true_to_mean,
                                      wrap_pi)
from adr_tours.astro.epochs import format_epoch, parse_epoch
from adr_tours.astro.mean_elements import mean_to_osculating, osculating_to_mean
from adr_tours.errors import ConfigError, DegenerateOrbitError


def test_invalid_elements_raise():
    with pytest.raises(DegenerateOrbitError):
        ClassicalElements(a=7000.0, e=1.2, i=0.5)
    with pytest.raises(DegenerateOrbitError):
        ClassicalElements(a=-1.0, e=0.0, i=0.5)


def test_angles_are_normalised():
    el = ClassicalElements(a=7000.0, e=0.01, i=1.0, raan=-0.5, argp=7.0, nu=-math.pi)
    assert 0.0 <= el.raan < 2.0 * math.pi
    assert el.argp == pytest.approx(7.0 - 2.0 * math.pi)
    assert wrap_pi(3.0 * math.pi / 2.0) == pytest.approx(-math.pi / 2.0)


def test_kepler_equation_inverse():
    for e in (0.0, 0.1, 0.6):
        assert true_to_mean(mean_to_true(1.3, e), e) == pytest.approx(1.3, abs=1e-12)


def test_cartesian_conversion_closes(env):
    el = ClassicalElements(a=7100.0, e=0.02, i=math.radians(51.6), raan=1.0, argp=0.4, nu=2.0)
    back = cartesian_to_elements(elements_to_cartesian(el, env), env)
    assert back.a == pytest.approx(el.a, rel=1e-10)
    assert back.e == pytest.approx(el.e, abs=1e-10)
    assert back.i == pytest.approx(el.i, abs=1e-10)
    assert back.raan == pytest.approx(el.raan, abs=1e-9)
    assert back.arg_latitude == pytest.approx(el.arg_latitude, abs=1e-9)


def test_mean_osculating_map_closes(env):
    mean = ClassicalElements(a=7000.0, e=1e-3, i=math.radians(98.0), raan=0.3, argp=0.2,
                             nu=0.1)
    osc = mean_to_osculating(mean, env)
    assert abs(osc.a - mean.a) > 1.0
    back = osculating_to_mean(osc, env)
    assert back.a == pytest.approx(mean.a, abs=0.05)
    assert back.i == pytest.approx(mean.i, abs=1e-7)
    assert back.raan == pytest.approx(mean.raan, abs=1e-7)


def test_mean_map_is_identity_without_j2(env):
    flat = type(env)(env.mu, env.re, 0.0, env.g0, None)
    el = ClassicalElements.circular(7000.0, 1.7)
    assert mean_to_osculating(el, flat) is el


def test_epoch_parsing():
    assert parse_epoch("2000-01-01T12:00:00Z") == 0.0
    assert parse_epoch(86400) == 86400.0
    assert format_epoch(parse_epoch("2022-03-25T00:00:00Z")).startswith("2022-03-25T00:00:00")
    with pytest.raises(ConfigError):
        parse_epoch("yesterday")
