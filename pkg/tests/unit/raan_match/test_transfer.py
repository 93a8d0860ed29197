import math

import pytest

from adr_tours.astro.elements import ClassicalElements, wrap_pi
from adr_tours.astro.perturbations import j2_raan_rate
from adr_tours.edelbaum.extended import ExtendedEdelbaumOptions
from adr_tours.raan_match.drift import DriftOrbit
from adr_tours.raan_match.transfer import raan_matching_transfer

RE = 6378.137


@pytest.fixture
def transfer(vacuum, servicer):
    origin = ClassicalElements.circular(RE + 350.0, math.radians(98.0), 0.0)
    target = ClassicalElements.circular(RE + 700.0, math.radians(98.2), math.radians(10.0))
    drift = DriftOrbit.from_radius(RE + 1000.0, math.radians(99.0), vacuum)
    options = ExtendedEdelbaumOptions(drag=False, eclipses=False)
    return raan_matching_transfer(origin, target, drift, servicer, vacuum, n_segments=50,
                                  options=options), target


def test_arrival_matches_the_target_plane(transfer, vacuum):
    result, target = transfer
    arrival = result.phase2.end()
    target_raan = target.raan + j2_raan_rate(target.a, 0.0, target.i, vacuum) * arrival.t
    assert arrival.a == pytest.approx(target.a, rel=1e-9)
    assert arrival.i == pytest.approx(target.i, abs=1e-9)
    assert float(wrap_pi(arrival.raan - target_raan)) == pytest.approx(0.0, abs=1e-6)


def test_phases_are_contiguous(transfer):
    result, _ = transfer
    assert result.drift.start_epoch == pytest.approx(result.phase1.end_epoch)
    assert result.phase2.start_epoch == pytest.approx(result.drift.end_epoch)
    assert result.phase2.raan[0] == pytest.approx(result.drift.raan[-1])
    assert [s.kind for s in result.segments] == ["thrust", "drift", "thrust"]


def test_totals(transfer):
    result, _ = transfer
    assert result.tof == pytest.approx(result.phase1.tof + result.drift_duration
                                       + result.phase2.tof)
    assert result.dv == pytest.approx(result.phase1.dv_total + result.phase2.dv_total)
    assert result.drift_dv == 0.0
    assert result.end_mass < 800.0
