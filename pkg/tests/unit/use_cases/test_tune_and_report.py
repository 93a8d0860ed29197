import json
from unittest.mock import MagicMock

import numpy as np
import pytest

from adr_tours.errors import ConfigError
from adr_tours.guidance.weights import default_weights
from adr_tours.tuner import TuningResult
from adr_tours.use_cases import BuildReport, TuneWeights, format_table


def _tuned(problem, swarm_size, iterations, seed, settings):
    return TuningResult(default_weights(problem.law), np.zeros(10), 0.5, 2.0, [1.0, 0.5],
                        swarm_size * iterations)


def test_tune_every_guidance_law_for_open_loop(mission_out):
    mission, directory = mission_out
    mission["guidance"] = {"law": "openloop"}
    tuner = MagicMock(side_effect=_tuned)
    summary = TuneWeights(tuner)(mission, swarm_size=4, iterations=2)
    assert [c.args[0].law for c in tuner.call_args_list] == ["ruggiero", "dvlaw", "qlaw"]
    assert tuner.call_args.kwargs["swarm_size"] == 4
    assert summary["laws"]["qlaw"]["evaluations"] == 8
    assert summary["laws"]["qlaw"]["rows"][0][0] == "1"
    assert (directory / "weights.yml").exists()
    assert (directory / "weights_dvlaw.csv").exists()


def test_tune_one_law(mission_out):
    mission, _ = mission_out
    tuner = MagicMock(side_effect=_tuned)
    summary = TuneWeights(tuner)(mission, law="ruggiero", seed=3, write=False)
    assert list(summary["laws"]) == ["ruggiero"]
    assert tuner.call_args.kwargs["seed"] == 3


def test_report_collects_every_output(mission_out):
    mission, directory = mission_out
    TuneWeights(MagicMock(side_effect=_tuned))(mission, law="qlaw")
    legs = [{"leg": 1, "da_km": -1.5, "di_deg": 0.01, "draan_deg": 0.2}]
    flight = {"law": "qlaw", "tof_days": 100.0, "fuel_kg": 12.0, "da_km": 1.5, "di_deg": 0.01,
              "draan_deg": 0.2, "legs": legs}
    (directory / "fly_qlaw.json").write_text(json.dumps(flight), encoding="utf-8")
    (directory / "fly_ruggiero.json").write_text(
        json.dumps({"law": "ruggiero", "aborted": "altitude too low", "leg": 1}),
        encoding="utf-8")

    result = BuildReport()(str(directory))
    text = result["text"]
    assert text.startswith("Fuel optimal tour")
    assert "Ruggiero: aborted on leg 1" in text
    assert "Guidance comparison" in text
    assert "Q-Law: tuned coefficients" in text
    assert result["flights"] == 1
    assert (directory / "report.txt").read_text(encoding="utf-8") == text


def test_report_needs_a_tour(tmp_path):
    with pytest.raises(ConfigError, match="run plan first"):
        BuildReport()(str(tmp_path))


def test_format_table():
    table = format_table(("Leg", "Delta-v (m/s)"), [("Handover", "-"), ("Total", "945.58")])
    assert table.splitlines() == [
        "Leg       Delta-v (m/s)",
        "--------  -------------",
        "Handover              -",
        "Total            945.58",
    ]
