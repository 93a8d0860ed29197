import math

import numpy as np
import pytest

from adr_tours.astro.eclipse import (eclipse_center_arglat, in_shadow, sun_direction,
                                     sunlit_fraction)
from adr_tours.astro.elements import ClassicalElements
from adr_tours.astro.epochs import SECONDS_PER_DAY


def test_sunlit_fraction_with_sun_in_orbit_plane(env):
    fraction = sunlit_fraction(6728.0, 0.0, 0.0, 0.0, env, sun=np.array([1.0, 0.0, 0.0]))
    assert fraction == pytest.approx(1.0 - math.asin(env.re / 6728.0) / math.pi, abs=1e-9)
    assert fraction == pytest.approx(0.603, abs=5e-3)


def test_sunlit_fraction_is_one_at_high_beta(env):
    assert sunlit_fraction(7000.0, 0.0, 0.0, 0.0, env, sun=np.array([0.0, 0.0, 1.0])) == 1.0


def test_eclipse_centre_is_anti_sun(env):
    el = ClassicalElements.circular(7000.0, 0.0)
    centre = eclipse_center_arglat(el, 0.0, env, sun=np.array([1.0, 0.0, 0.0]))
    assert centre == pytest.approx(math.pi)
    assert eclipse_center_arglat(el, 0.0, env, sun=np.array([0.0, 0.0, 1.0])) is None


def test_in_shadow_behind_the_earth(env):
    sun = np.array([1.0, 0.0, 0.0])
    assert in_shadow(np.array([-7000.0, 0.0, 0.0]), 0.0, env, sun)
    assert not in_shadow(np.array([7000.0, 0.0, 0.0]), 0.0, env, sun)
    assert not in_shadow(np.array([-7000.0, 7000.0, 0.0]), 0.0, env, sun)


def test_sun_direction_stays_within_obliquity():
    for day in np.linspace(0.0, 365.25, 13):
        s = sun_direction(day * SECONDS_PER_DAY)
        assert np.linalg.norm(s) == pytest.approx(1.0)
        assert abs(math.degrees(math.asin(s[2]))) <= 23.45


def test_sun_direction_reverses_in_half_a_year():
    first = sun_direction(0.0)
    later = sun_direction(182.62 * SECONDS_PER_DAY)
    assert float(np.dot(first, later)) < -0.99
