import math

import numpy as np
import pytest

from adr_tours.astro.elements import ClassicalElements, angle_distance
from adr_tours.astro.environment import Environment
from adr_tours.edelbaum.classical import EdelbaumBoundary
from adr_tours.edelbaum.extended import ExtendedEdelbaumOptions, extended_edelbaum
from adr_tours.errors import ConfigError, PropagationAbortError
from adr_tours.guidance.weights import DvLawWeights
from adr_tours.propagator import OPEN_LOOP, PropagationConfig, propagate_leg
from adr_tours.propagator.propagate import forward_propagate_pmdt
from adr_tours.raan_match.drift import DriftOrbit, drift_profile

RE = 6378.137


@pytest.fixture
def short_raise(vacuum, servicer):
    """Quarter-kilometre raise at 700 km: about an hour of thrusting."""
    start = ClassicalElements.circular(RE + 700.0, math.radians(98.0))
    b = EdelbaumBoundary.from_orbits(start.a, start.a + 0.25, start.i, start.i, vacuum)
    profile = extended_edelbaum(b, servicer, vacuum, 20,
                                options=ExtendedEdelbaumOptions(drag=False, eclipses=False))
    return start, profile


def test_open_loop_leg(vacuum, servicer, short_raise):
    start, profile = short_raise
    log = forward_propagate_pmdt(start, profile, servicer, vacuum, eclipses=False,
                                 leg_index=0)
    assert log.law == OPEN_LOOP
    assert log.tof == pytest.approx(profile.tof)
    # one hour at full thrust burns 0.06 * 3600 / (1300 * 9.80665) kg
    assert 0.0 < log.fuel <= 0.0170 * profile.tof / 3600.0
    assert log.rocket_consistency() < 1e-6
    assert 0.0 < log.duty() < 1.0
    assert log.leg_index == 0


def test_guided_leg_logs_its_scalar(vacuum, servicer, short_raise):
    start, profile = short_raise
    cfg = PropagationConfig("dvlaw", profile, DvLawWeights(), eclipses=False, log_every=5)
    log = propagate_leg(start, cfg, servicer, vacuum)
    assert log.mean.shape[1] == 6
    assert math.isfinite(log.scalar[0])
    assert abs(log.errors.da) < 1.0
    assert log.summary()["law"] == "dvlaw"


def test_abort_below_the_floor(vacuum, servicer, short_raise):
    start, profile = short_raise
    cfg = PropagationConfig(OPEN_LOOP, profile, abort_altitude=800.0)
    with pytest.raises(PropagationAbortError) as info:
        propagate_leg(start, cfg, servicer, vacuum, leg_index=3)
    assert info.value.leg_index == 3
    assert info.value.time == pytest.approx(profile.start_epoch)
    assert info.value.exit_code == 4


@pytest.mark.parametrize("changes", [
    {"law": "bangbang"},
    {"law": "qlaw"},
    {"control_step": 0.0},
    {"control_step": 60.0, "coast_step": 30.0},
    {"log_every": 0},
    {"reference": ()},
])
def test_config_validation(short_raise, changes):
    kwargs = {"law": OPEN_LOOP, "reference": short_raise[1], **changes}
    with pytest.raises(ConfigError):
        PropagationConfig(**kwargs)


def test_overlapping_reference_rejected(short_raise):
    profile = short_raise[1]
    with pytest.raises(ConfigError):
        PropagationConfig(OPEN_LOOP, (profile, profile))


def _coasting_leg(servicer, env, days, **settings):
    """Guided drift leg that starts on its reference, so the deadband never fires."""
    orbit = DriftOrbit.from_radius(7000.0, math.radians(60.0), env)
    reference = drift_profile(orbit, 0.0, days * 86400.0, 0.0, servicer, env, mass0=800.0)
    start = ClassicalElements.circular(orbit.a(env), orbit.i_d)
    cfg = PropagationConfig("dvlaw", reference, DvLawWeights(), eclipses=False, log_every=1,
                            **settings)
    return propagate_leg(start, cfg, servicer, env)


def test_two_body_energy_is_conserved_over_a_hundred_orbits(servicer):
    two_body = Environment(j2=0.0, atmosphere=None)
    period = 2.0 * math.pi * math.sqrt(7000.0 ** 3 / two_body.mu)
    log = _coasting_leg(servicer, two_body, 100.0 * period / 86400.0)

    a = log.osculating[:, 0]
    assert log.fuel == 0.0
    assert not log.throttle.any()
    # circular two-body energy is -mu / 2a
    assert np.max(np.abs(a - a[0])) / a[0] < 1e-7


def test_deadband_coast_takes_long_steps(servicer, vacuum):
    log = _coasting_leg(servicer, vacuum, 1.0)

    steps = np.diff(log.t)
    assert steps[:-1] == pytest.approx(3600.0)
    assert steps[-1] <= 3600.0 + 1e-6
    assert log.tof == pytest.approx(86400.0)


def test_coast_steps_follow_the_control_step_trajectory(servicer, vacuum):
    coarse = _coasting_leg(servicer, vacuum, 0.5)
    fine = _coasting_leg(servicer, vacuum, 0.5, coast_step=60.0)

    assert len(fine.t) > 10 * len(coarse.t)
    assert coarse.osculating[-1, 0] == pytest.approx(fine.osculating[-1, 0], abs=1e-4)
    arg_latitude = coarse.osculating[-1, 4:].sum(), fine.osculating[-1, 4:].sum()
    assert angle_distance(*arg_latitude) < 1e-5
