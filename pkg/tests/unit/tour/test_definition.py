import math

import numpy as np
import pytest

from adr_tours.astro.elements import ClassicalElements
from adr_tours.astro.perturbations import j2_raan_rate
from adr_tours.errors import ConfigError
from adr_tours.tour.definition import DAY, DebrisTarget, DecisionLayout, TourDefinition

RE = 6378.137


def _debris(name, altitude, inclination=98.0, raan=0.0):
    el = ClassicalElements.circular(RE + altitude, math.radians(inclination),
                                    math.radians(raan))
    return DebrisTarget(name, el, 2000.0, 10.0)


def test_layout_of_a_three_debris_tour(env, servicer):
    definition = TourDefinition((_debris("A", 600.0), _debris("B", 650.0), _debris("C", 700.0)),
                                servicer, env)
    layout = definition.layout()
    assert layout.n_drift == 2 and layout.size == 4
    assert not layout.has_launch_offset
    # lower speed bound is the top of the altitude box
    assert layout.lower[0] == pytest.approx(env.circular_speed(RE + 1200.0))
    assert layout.upper[0] == pytest.approx(env.circular_speed(RE + 300.0))
    assert layout.lower[1] == pytest.approx(math.radians(95.0))


def test_launch_window_adds_a_variable(env, servicer):
    definition = TourDefinition((_debris("A", 600.0), _debris("B", 650.0)), servicer, env,
                                launch_window=30.0 * DAY)
    layout = definition.layout()
    assert layout.size == 3 and layout.has_launch_offset
    x = layout.from_unit([0.5, 0.5, 0.5])
    assert layout.launch_offset(x) == pytest.approx(15.0 * DAY)
    np.testing.assert_allclose(layout.to_unit(x), [0.5, 0.5, 0.5])


def test_drift_orbits_from_vector(env):
    x = DecisionLayout.from_drift_orbits([(RE + 1284.7, math.radians(98.29))], env)
    layout = DecisionLayout(1, np.array([7.0, 1.6]), np.array([8.0, 1.8]))
    (drift,) = layout.drift_orbits(x)
    assert drift.altitude(env) == pytest.approx(1284.7)
    assert math.degrees(drift.i_d) == pytest.approx(98.29)
    with pytest.raises(ConfigError):
        layout.drift_orbits([7.5])


def test_debris_state_precesses(env):
    debris = _debris("A", 600.0, raan=10.0)
    later = debris.at(10.0 * DAY, env, decay=False)
    rate = j2_raan_rate(debris.elements.a, 0.0, debris.elements.i, env)
    assert later.raan == pytest.approx(math.radians(10.0) + rate * 10.0 * DAY)
    assert later.a == debris.elements.a


def test_debris_orbit_decays_by_default(env, servicer):
    debris = _debris("A", 600.0)
    soon, later = debris.at(40.0 * DAY, env), debris.at(400.0 * DAY, env)
    assert later.a < soon.a < debris.elements.a
    assert debris.at(0.0, env).a == debris.elements.a
    assert TourDefinition((debris,), servicer, env).debris_decay


def test_debris_without_drag_area_keeps_its_orbit(env):
    debris = DebrisTarget("bare", _debris("A", 600.0).elements, 2000.0)
    assert debris.at(400.0 * DAY, env).a == debris.elements.a


@pytest.mark.parametrize("changes", [
    {"debris": ()},
    {"objective": "cost"},
    {"tof_max": -1.0},
    {"altitude_bounds": (500.0, 400.0)},
    {"n_segments": 1},
])
def test_definition_validation(env, servicer, changes):
    kwargs = {"debris": (_debris("A", 600.0),), "sc": servicer, "env": env, **changes}
    with pytest.raises(ConfigError):
        TourDefinition(**kwargs)
