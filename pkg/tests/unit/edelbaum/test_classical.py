import math

import numpy as np
import pytest

from adr_tours.edelbaum.classical import (EdelbaumArc, EdelbaumBoundary, classical_delta_v,
                                          classical_tof, evaluate_profile, initial_yaw)
from adr_tours.errors import DomainError


def test_plane_change_delta_v():
    b = EdelbaumBoundary(7.7, 7.7, math.radians(2.0))
    assert classical_delta_v(b) == pytest.approx(0.4222, abs=1e-4)
    # small-angle limit (pi/2) V di
    assert classical_delta_v(b) == pytest.approx(0.5 * math.pi * 7.7 * math.radians(2.0),
                                                 rel=1e-3)


def test_coplanar_delta_v_is_speed_difference():
    assert classical_delta_v(EdelbaumBoundary(7.6, 7.2, 0.0)) == pytest.approx(0.4)


def test_classical_tof():
    assert classical_tof(0.2688, 0.060 / 800.0 / 1000.0) == pytest.approx(3.584e6, rel=1e-3)
    with pytest.raises(DomainError):
        classical_tof(0.1, 0.0)


def test_initial_yaw_identity():
    b = EdelbaumBoundary(7.7, 7.5, math.radians(2.0))
    half = 0.5 * math.pi * b.di
    beta0 = initial_yaw(b)
    assert math.tan(beta0) == pytest.approx(math.sin(half) / (b.v0 / b.vf - math.cos(half)))


def test_coplanar_yaw_raises_or_lowers():
    assert initial_yaw(EdelbaumBoundary(7.7, 7.5, 0.0)) == 0.0
    assert initial_yaw(EdelbaumBoundary(7.5, 7.7, 0.0)) == pytest.approx(math.pi)


def test_arc_reaches_the_target(env):
    b = EdelbaumBoundary.from_orbits(7000.0, 7600.0, math.radians(97.0), math.radians(99.0),
                                     env)
    arc = EdelbaumArc.solve(b)
    assert float(arc.semi_major_axis(arc.dv, env.mu)) == pytest.approx(7600.0, rel=1e-9)
    assert float(arc.inclination(arc.dv)) == pytest.approx(math.radians(99.0), abs=1e-9)
    assert float(arc.speed(0.0)) == pytest.approx(b.v0)


def test_evaluate_profile_totals(env):
    b = EdelbaumBoundary.from_orbits(7000.0, 7300.0, 1.7, 1.72, env, raan0=0.4, epoch0=100.0)
    f = 7.5e-8
    profile = evaluate_profile(b, f, 100, env, mass0=800.0, exhaust_velocity=12.75)
    assert len(profile) == 101
    assert profile.dv_total == pytest.approx(classical_delta_v(b))
    assert profile.tof == pytest.approx(classical_delta_v(b) / f)
    assert profile.start_epoch == 100.0
    assert np.all(profile.raan == 0.4)
    assert profile.mass[-1] == pytest.approx(800.0 * math.exp(-profile.dv_total / 12.75))


def test_boundary_validation():
    with pytest.raises(DomainError):
        EdelbaumBoundary(0.0, 7.5, 0.0)
    with pytest.raises(DomainError):
        EdelbaumBoundary(7.5, 7.5, 4.0)
