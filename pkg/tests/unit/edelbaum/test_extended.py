import math

import pytest

from adr_tours.edelbaum.classical import EdelbaumBoundary, classical_delta_v
from adr_tours.edelbaum.extended import ExtendedEdelbaumOptions, extended_edelbaum
from adr_tours.errors import AltitudeFloorError, ConfigError

RE = 6378.137


def _boundary(env, h0=800.0, hf=1100.0, i0=98.0, i_f=98.3):
    return EdelbaumBoundary.from_orbits(RE + h0, RE + hf, math.radians(i0), math.radians(i_f),
                                        env)


def test_duty_ratio_dilates_time_of_flight(vacuum, servicer):
    b = _boundary(vacuum)
    options = ExtendedEdelbaumOptions(drag=False, eclipses=False, constant_mass=True)
    profile = extended_edelbaum(b, servicer, vacuum, 200, options=options)
    f = servicer.max_thrust / servicer.wet_mass / 1000.0
    assert profile.dv_total == pytest.approx(classical_delta_v(b), rel=1e-9)
    assert profile.tof == pytest.approx(profile.dv_total / (f * servicer.duty_ratio), rel=1e-9)
    assert profile.restarts == 0


def test_mass_depletion_shortens_the_transfer(vacuum, servicer):
    b = _boundary(vacuum)
    constant = extended_edelbaum(b, servicer, vacuum, 200, options=ExtendedEdelbaumOptions(
        drag=False, eclipses=False, constant_mass=True))
    depleting = extended_edelbaum(b, servicer, vacuum, 200, options=ExtendedEdelbaumOptions(
        drag=False, eclipses=False))
    assert depleting.tof < constant.tof
    assert depleting.mass[-1] == pytest.approx(
        servicer.mass_after(servicer.wet_mass, depleting.dv_total, vacuum.g0))


def test_drag_costs_delta_v_and_lands_on_target(env, servicer):
    b = _boundary(env, h0=350.0, hf=700.0, i0=98.0, i_f=98.0)
    options = ExtendedEdelbaumOptions(eclipses=False)
    profile = extended_edelbaum(b, servicer, env, 200, options=options)
    assert profile.dv_total > classical_delta_v(b)
    assert profile.a[-1] == pytest.approx(RE + 700.0, abs=0.5)
    assert profile.i[-1] == pytest.approx(math.radians(98.0))


def test_raan_follows_j2_precession(vacuum, servicer):
    profile = extended_edelbaum(_boundary(vacuum), servicer, vacuum, 100,
                                options=ExtendedEdelbaumOptions(drag=False, eclipses=False))
    # sun-synchronous-like orbits precess eastward
    assert profile.raan[-1] > profile.raan[0]


def test_identity_transfer_is_a_single_sample(vacuum, servicer):
    profile = extended_edelbaum(_boundary(vacuum, 800.0, 800.0, 98.0, 98.0), servicer, vacuum)
    assert len(profile) == 1
    assert profile.tof == 0.0 and profile.dv_total == 0.0


def test_altitude_floor(vacuum, servicer):
    with pytest.raises(AltitudeFloorError):
        extended_edelbaum(_boundary(vacuum, 400.0, 150.0, 98.0, 98.0), servicer, vacuum, 50,
                          options=ExtendedEdelbaumOptions(drag=False, eclipses=False))


def test_option_validation():
    with pytest.raises(ConfigError):
        ExtendedEdelbaumOptions(max_restarts=-1)
    with pytest.raises(ConfigError):
        ExtendedEdelbaumOptions(delta_a_threshold=0.0)


def test_drag_helps_a_lowering_transfer(env, servicer):
    b = _boundary(env, h0=600.0, hf=300.0, i0=98.0, i_f=98.0)
    profile = extended_edelbaum(b, servicer, env, 1000,
                                options=ExtendedEdelbaumOptions(eclipses=False))
    assert profile.restarts > 0
    assert profile.dv_total < classical_delta_v(b)
    assert profile.a[-1] == pytest.approx(RE + 300.0, abs=0.5)


@pytest.mark.slow
def test_lowering_transfer_converges_with_segments(env, servicer):
    b = _boundary(env, h0=600.0, hf=300.0, i0=98.0, i_f=98.0)
    options = ExtendedEdelbaumOptions(eclipses=False, delta_a_threshold=0.3,
                                      max_restarts=10_000)
    coarse = extended_edelbaum(b, servicer, env, 1_000, options=options)
    fine = extended_edelbaum(b, servicer, env, 100_000, options=options)
    # the leftover drag offset is below the restart threshold in both runs
    assert coarse.dv_total == pytest.approx(fine.dv_total, rel=2e-3)
    assert coarse.tof == pytest.approx(fine.tof, rel=2e-3)
    assert fine.dv_total < classical_delta_v(b)
