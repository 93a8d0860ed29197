"""
Command modules of the mission workflows: each runs a use case and prints its tables.
"""
from typing import Optional, Sequence

from ...propagator.tour import COMPARISON_HEADER
from ...tour.solution import LEG_TABLE_HEADER
from ...use_cases import build_report, fly_mission, format_table, plan_tour, tune_mission
from ...use_cases.fly import ERROR_HEADER
from ...use_cases.tune import WEIGHTS_HEADER


def plan(config: str, catalog: str, objective: Optional[str] = None,
         seed: Optional[int] = None, out: Optional[str] = None) -> dict:
    summary = plan_tour(config, catalog, objective=objective, seed=seed, out=out)
    print(format_table(LEG_TABLE_HEADER, summary["legs"]))
    print(f"Propellant: {summary['fuel_kg']:.2f} kg")
    return summary


def fly(config: str, solution: Optional[str] = None, law: Optional[str] = None,
        legs: Optional[Sequence[int]] = None, out: Optional[str] = None,
        control_step: Optional[float] = None) -> dict:
    settings = {} if control_step is None else {"control_step": control_step}
    summary = fly_mission(config, solution=solution, law=law, legs=legs, out=out, **settings)
    for flight in summary["flights"]:
        rows = [[str(leg["leg"]), f"{abs(leg['da_km']):.3f}", f"{abs(leg['di_deg']):.3f}",
                 f"{abs(leg['draan_deg']):.3f}"] for leg in flight["legs"]]
        print(flight["law"])
        print(format_table(ERROR_HEADER, rows))
    if summary["comparison"]:
        print(format_table(COMPARISON_HEADER, summary["comparison"]))
    return summary


def tune(config: str, solution: Optional[str] = None, law: Optional[str] = None,
         seed: Optional[int] = None, swarm_size: Optional[int] = None,
         iterations: Optional[int] = None, out: Optional[str] = None) -> dict:
    summary = tune_mission(config, solution=solution, law=law, seed=seed,
                           swarm_size=swarm_size, iterations=iterations, out=out)
    for name, result in summary["laws"].items():
        print(f"{name}: fitness {result['fitness']:.6g} "
              f"(unit weights {result['baseline_fitness']:.6g})")
        print(format_table(WEIGHTS_HEADER, result["rows"]))
    return summary


def report(out: str) -> dict:
    result = build_report(out)
    print(result["text"], end="")
    return result
