from unittest.mock import MagicMock

import numpy as np
import pytest

from adr_tours.errors import TourInfeasibleError
from adr_tours.use_cases import PlanTour
from tests.conftest import CATALOG


def test_plan_writes_the_tour_files(mission_dict, tiny_solution, tmp_path):
    optimizer = MagicMock(return_value=(tiny_solution, np.zeros(2)))
    summary = PlanTour(optimizer)(mission_dict, CATALOG)

    definition, x0, options = optimizer.call_args.args
    assert [d.name for d in definition.debris] == ["H-2A R/B", "ALOS-2"]
    assert definition.layout().contains(x0)
    assert options.multistarts == 1
    assert summary["dv_m_s"] == pytest.approx(tiny_solution.dv * 1000.0)
    assert summary["legs"][-1][0] == "Total"
    out = tmp_path / "out"
    assert (out / "solution.json").exists()
    assert (out / "legs.csv").read_text(encoding="utf-8").startswith("Leg,Delta-v (m/s)")
    assert (out / "profiles" / "01_deorbit_1_thrust.csv").exists()
    assert summary["files"]["solution"] == str(out / "solution.json")


def test_plan_overrides(mission_dict, tiny_solution, catalog_text, tmp_path):
    optimizer = MagicMock(return_value=(tiny_solution, np.zeros(2)))
    summary = PlanTour(optimizer)(mission_dict, catalog_text, objective="time", seed=4,
                                  out=str(tmp_path / "elsewhere"), write=False)
    definition, _, options = optimizer.call_args.args
    assert definition.objective == "time"
    assert options.seed == 4
    assert "files" not in summary
    assert not (tmp_path / "elsewhere").exists()


def test_plan_infeasible(mission_dict):
    optimizer = MagicMock(side_effect=TourInfeasibleError("no tour", 0.2))
    with pytest.raises(TourInfeasibleError):
        PlanTour(optimizer)(mission_dict, CATALOG)
