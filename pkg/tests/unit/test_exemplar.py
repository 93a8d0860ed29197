"""
Exemplar three-debris tours, planned and flown, against the reference figures. Run with
``--runslow``.

Totals are compared with a tolerance rather than to the printed digits: the element sets
behind the reference figures are not published, only the catalog numbers.
"""
import os
from pathlib import Path

import pytest

from adr_tours.guidance.weights import LAWS
from adr_tours.propagator import OPEN_LOOP, fly_tour
from adr_tours.tour.solution import TourSolution
from adr_tours.use_cases import plan_tour
from adr_tours.use_cases.common import SOLUTION_FILE, resolve_config
from tests.conftest import CATALOG, MISSIONS

pytestmark = pytest.mark.slow

# an archived catalog of the mission epoch replaces the bundled one when given
EXEMPLAR_CATALOG = Path(os.environ.get("ADR_TOURS_CATALOG", CATALOG))

DEORBIT_DV_M_S = (140.12, 151.93, 175.14)
DEORBIT_TOF_DAYS = (203.82, 166.91, 164.25)


@pytest.fixture(scope="module")
def fuel_plan():
    return plan_tour(MISSIONS / "exemplar_fuel.yml", EXEMPLAR_CATALOG, write=False)


@pytest.fixture(scope="module")
def time_plan():
    return plan_tour(MISSIONS / "exemplar_time.yml", EXEMPLAR_CATALOG, write=False)


def _deorbit_rows(summary):
    return [row for row in summary["legs"]
            if row[0].startswith("Leg") and row[0].endswith("km orbit)")]


def test_fuel_optimal_tour(fuel_plan):
    assert fuel_plan["tof_days"] <= 1825.0 + 1e-6
    assert fuel_plan["dv_m_s"] <= 1000.0
    assert fuel_plan["dv_m_s"] == pytest.approx(945.58, rel=0.10)
    assert fuel_plan["fuel_kg"] == pytest.approx(136.07, rel=0.10)
    assert fuel_plan["constraint_active"]
    assert len(fuel_plan["drift_orbits"]) == 2


def test_time_optimal_tour(time_plan):
    assert time_plan["dv_m_s"] <= 1500.0 + 1e-6
    assert time_plan["tof_days"] <= 1400.0
    assert time_plan["tof_days"] == pytest.approx(1274.54, rel=0.10)
    assert time_plan["fuel_kg"] == pytest.approx(166.18, rel=0.10)
    assert time_plan["constraint_active"]


@pytest.mark.parametrize("plan", ["fuel_plan", "time_plan"])
def test_deorbit_legs(plan, request):
    rows = _deorbit_rows(request.getfixturevalue(plan))

    assert len(rows) == 3
    for (label, dv, tof), expected_dv, expected_tof in zip(rows, DEORBIT_DV_M_S,
                                                           DEORBIT_TOF_DAYS):
        assert float(dv) == pytest.approx(expected_dv, rel=0.07), label
        assert float(tof) == pytest.approx(expected_tof, rel=0.10), label


def test_time_optimal_tour_is_faster_and_costlier(fuel_plan, time_plan):
    assert time_plan["tof_days"] < fuel_plan["tof_days"]
    assert time_plan["dv_m_s"] > fuel_plan["dv_m_s"]


@pytest.fixture(scope="module")
def fuel_flights(tmp_path_factory):
    """The fuel-optimal tour flown open loop and under every guidance law."""
    out = tmp_path_factory.mktemp("fuel")
    mission = resolve_config(MISSIONS / "exemplar_fuel.yml", out=str(out))
    plan_tour(mission, EXEMPLAR_CATALOG)
    tour = TourSolution.from_json(out / SOLUTION_FILE)
    flights = {}
    for law in (OPEN_LOOP, *LAWS):
        weights = None if law == OPEN_LOOP else mission.guidance.weights_for(law, tour.objective)
        flights[law] = fly_tour(tour, law, mission.spacecraft, mission.environment, weights,
                                **mission.guidance.propagation)
    return tour, flights


@pytest.mark.parametrize("law", LAWS)
def test_guidance_reduces_the_raan_error(fuel_flights, law):
    _, flights = fuel_flights
    assert flights[law].total_errors()[2] < flights[OPEN_LOOP].total_errors()[2]


def test_guided_legs_stay_in_the_handover_budget(fuel_flights):
    _, flights = fuel_flights
    within = [law for law in LAWS if all(log.errors.within() for log in flights[law].logs)]
    assert len(within) >= 2, within


def test_flown_fuel_closes_the_ledger(fuel_flights):
    tour, flights = fuel_flights
    for law, flight in flights.items():
        assert all(log.rocket_consistency() < 0.005 for log in flight.logs), law
        if law != OPEN_LOOP:
            assert flight.fuel < 1.05 * tour.fuel, law
