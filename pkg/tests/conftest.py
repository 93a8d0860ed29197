from pathlib import Path

import pytest

from adr_tours.astro.environment import Environment, SpacecraftConfig

ROOT = Path(__file__).resolve().parents[1]
MISSIONS = ROOT / "missions"
CATALOG = MISSIONS / "debris_2022-03-25.tle"


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run the exemplar reproduction tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def env():
    return Environment()


@pytest.fixture
def vacuum():
    return Environment().with_vacuum()


@pytest.fixture
def servicer():
    return SpacecraftConfig(wet_mass=800.0, max_thrust=0.060, isp=1300.0, duty_ratio=0.5)


@pytest.fixture
def catalog_text():
    return CATALOG.read_text(encoding="utf-8")


@pytest.fixture
def mission_dict(tmp_path):
    """Two-debris mission with a coarse search, small enough for unit tests."""
    return {
        "version": 1,
        "spacecraft": {"wet_mass_kg": 800, "max_thrust_n": 0.06, "isp_s": 1300,
                       "duty_ratio": 0.5},
        "tour": {
            "launch_epoch": "2022-03-25T00:00:00Z",
            "objective": "fuel",
            "tof_max_days": 1825,
            "altitude_bounds_km": [300, 1500],
            "debris": [{"id": 33500, "mass_kg": 3000}, {"id": 39766, "mass_kg": 2120}],
            "n_segments": 50,
        },
        "optimizer": {"multistarts": 1, "max_evaluations": 5, "search_segments": 20},
        "output": {"directory": str(tmp_path / "out")},
    }
