import math

import numpy as np
import pytest
from scipy.integrate import solve_ivp

from adr_tours.astro.elements import (CartesianState, ClassicalElements, cartesian_to_elements,
                                      elements_to_cartesian, wrap_pi)
from adr_tours.astro.mean_elements import mean_to_osculating, osculating_to_mean
from adr_tours.astro.perturbations import (circular_drag_decay_rate, drag_magnitude,
                                           j2_acceleration, j2_raan_rate)
from adr_tours.errors import AltitudeRangeError
from adr_tours.propagator.dynamics import equations_of_motion, thrust_force


def test_sun_synchronous_raan_rate(env):
    rate = j2_raan_rate(6378.137 + 800.0, 0.0, math.radians(98.6), env)
    assert math.degrees(rate) * 86400.0 == pytest.approx(0.9856, abs=1e-3)


def test_raan_rate_changes_sign_with_inclination(env):
    prograde = j2_raan_rate(7000.0, 0.0, math.radians(60.0), env)
    retrograde = j2_raan_rate(7000.0, 0.0, math.radians(120.0), env)
    assert prograde < 0.0 < retrograde
    assert prograde == pytest.approx(-retrograde)
    assert j2_raan_rate(7000.0, 0.0, math.pi / 2.0, env) == pytest.approx(0.0, abs=1e-18)


def test_j2_acceleration_on_equator_points_inward(env):
    acc = j2_acceleration(CartesianState(np.array([7000.0, 0.0, 0.0]), np.zeros(3)), env)
    expected = -1.5 * env.j2 * env.mu * env.re ** 2 / 7000.0 ** 4
    assert acc[0] == pytest.approx(expected)
    assert acc[1] == 0.0 and acc[2] == 0.0


def test_drag_magnitude_hand_value(env, monkeypatch):
    monkeypatch.setattr(type(env), "density", lambda self, altitude: 1e-12)
    value = drag_magnitude(500.0, 7.7, 2.2, 800.0, env)
    assert value * 1000.0 == pytest.approx(8.15e-8, rel=1e-3)


def test_drag_decays_a_circular_orbit(env):
    assert circular_drag_decay_rate(6378.137 + 400.0, 2.2, 800.0, env) < 0.0


def test_density_outside_table_raises(env, vacuum):
    with pytest.raises(AltitudeRangeError):
        env.density(2500.0)
    with pytest.raises(AltitudeRangeError):
        vacuum.density(50.0)
    assert vacuum.density(400.0) == 0.0


def test_density_decreases_with_altitude(env):
    densities = [env.density(h) for h in (150.0, 300.0, 600.0, 1200.0)]
    assert all(a > b for a, b in zip(densities, densities[1:]))


def test_integrated_nodal_drift_matches_the_secular_rate(vacuum):
    start = ClassicalElements.circular(6378.137 + 500.0, math.radians(51.6),
                                       raan=math.radians(30.0))
    cart = elements_to_cartesian(mean_to_osculating(start, vacuum), vacuum)
    rhs = equations_of_motion(vacuum, 0.0, 12.75, thrust_force(None, 0.06), drag=False)
    span = 10.0 * 2.0 * math.pi * math.sqrt(start.a ** 3 / vacuum.mu)

    y0 = np.concatenate((cart.position, cart.velocity, [800.0, 0.0]))
    sol = solve_ivp(rhs, (0.0, span), y0, method="DOP853", rtol=1e-11, atol=1e-10)
    y = sol.y[:, -1]
    end = osculating_to_mean(cartesian_to_elements(CartesianState(y[:3], y[3:6], span), vacuum),
                             vacuum)

    drift = float(wrap_pi(end.raan - start.raan))
    expected = j2_raan_rate(start.a, 0.0, start.i, vacuum) * span
    assert sol.success
    assert drift == pytest.approx(expected, rel=0.01)
