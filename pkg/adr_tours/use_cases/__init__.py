"""Mission workflows shared by the command line and the HTTP service."""
from .fly import FlyTour, fly_mission
from .plan import PlanTour, plan_summary, plan_tour
from .report import BuildReport, build_report, format_table
from .tune import TuneWeights, tune_mission

__all__ = [
    "BuildReport", "FlyTour", "PlanTour", "TuneWeights", "build_report", "fly_mission",
    "format_table", "plan_summary", "plan_tour", "tune_mission",
]
