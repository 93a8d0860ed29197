import json
from unittest.mock import MagicMock

import pytest

from adr_tours.errors import ConfigError, PropagationAbortError
from adr_tours.propagator import OPEN_LOOP, TourFlight
from adr_tours.use_cases import FlyTour
from adr_tours.use_cases.common import resolve_laws


def _flight(tour, law, sc, env, weights=None, legs=None, **settings):
    return TourFlight(law, (), dwell_tof=86400.0, dwell_fuel=1.0)


def test_fly_configured_law(mission_out):
    mission, directory = mission_out
    flyer = MagicMock(side_effect=_flight)
    summary = FlyTour(flyer)(mission, control_step=30.0)
    flyer.assert_called_once()
    assert flyer.call_args.args[1] == "dvlaw"
    assert flyer.call_args.kwargs["control_step"] == 30.0
    assert flyer.call_args.kwargs["weights"].law == "dvlaw"
    assert summary["comparison"] == [["Delta-v Law", "1.0", "1.00", "0.000", "0.000", "0.000"]]
    assert (directory / "fly_dvlaw.json").exists()
    assert (directory / "comparison.csv").exists()


def test_fly_all_laws_records_aborts(mission_out):
    mission, directory = mission_out

    def flyer(tour, law, *args, **kwargs):
        if law == "qlaw":
            raise PropagationAbortError("altitude 140.0 km below 150 km", 10.0, 1)
        return _flight(tour, law, *args, **kwargs)

    fly = FlyTour(MagicMock(side_effect=flyer))
    with pytest.raises(PropagationAbortError):
        fly(mission, law="all", legs=[1])
    assert fly.flyer.call_count == 4
    assert fly.flyer.call_args_list[0].kwargs["weights"] is None
    assert fly.flyer.call_args_list[0].kwargs["legs"] == [1]
    aborted = json.loads((directory / "fly_qlaw.json").read_text(encoding="utf-8"))
    assert aborted["leg"] == 1 and "140.0 km" in aborted["aborted"]
    assert (directory / f"fly_{OPEN_LOOP}.json").exists()


def test_fly_needs_a_tour_record(mission_dict):
    with pytest.raises(ConfigError):
        FlyTour(MagicMock())(mission_dict)


def test_law_names():
    assert resolve_laws("all", "dvlaw") == [OPEN_LOOP, "ruggiero", "dvlaw", "qlaw"]
    assert resolve_laws(None, "qlaw") == ["qlaw"]
    assert resolve_laws("openloop", "dvlaw") == [OPEN_LOOP]
    with pytest.raises(ConfigError):
        resolve_laws("bangbang", "dvlaw")
