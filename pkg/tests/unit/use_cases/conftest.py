import math
from pathlib import Path

import pytest

from adr_tours.astro.elements import ClassicalElements
from adr_tours.edelbaum.classical import EdelbaumBoundary
from adr_tours.edelbaum.extended import ExtendedEdelbaumOptions, extended_edelbaum
from adr_tours.tour.solution import TourLeg, TourSolution

RE = 6378.137


@pytest.fixture
def tiny_solution(vacuum, servicer):
    """One lowering leg from 700 to 690 km, enough to exercise the mission files."""
    start = ClassicalElements.circular(RE + 700.0, math.radians(98.0))
    b = EdelbaumBoundary.from_orbits(start.a, RE + 690.0, start.i, start.i, vacuum)
    profile = extended_edelbaum(b, servicer, vacuum, 10, mass0=900.0,
                                options=ExtendedEdelbaumOptions(drag=False, eclipses=False))
    end = profile.end()
    leg = TourLeg("deorbit", "Leg 1 (from A to 350 km orbit)", "A", (profile,), 800.0,
                  end.mass - 100.0, 100.0, ClassicalElements.circular(end.a, end.i, end.raan,
                                                                       epoch=end.t), 1)
    return TourSolution((leg,), objective="fuel", constraint_bound=1825.0 * 86400.0)


@pytest.fixture
def mission_out(mission_dict, tiny_solution):
    """Mission document whose output directory already holds a tour record."""
    directory = Path(mission_dict["output"]["directory"])
    directory.mkdir(parents=True)
    tiny_solution.to_json(directory / "solution.json")
    return mission_dict, directory
