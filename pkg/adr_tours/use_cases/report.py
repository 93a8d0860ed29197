"""
Report use case: plain-text tables from the files written by ``plan``, ``fly`` and ``tune``.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Sequence

from ..config.mission import load_weights
from ..errors import ConfigError
from ..guidance.weights import LAWS
from ..propagator.config import OPEN_LOOP
from ..propagator.tour import COMPARISON_HEADER, SCHEME_LABELS
from ..tour.solution import LEG_TABLE_HEADER, TourSolution
from .common import REPORT_FILE, SOLUTION_FILE, WEIGHTS_FILE, fly_summary_file
from .fly import ERROR_HEADER
from .tune import WEIGHTS_HEADER

logger = logging.getLogger(__name__)


def format_table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """Left-aligned first column, right-aligned others, widths from the content."""
    cells = [list(map(str, header))] + [list(map(str, row)) for row in rows]
    widths = [max(len(row[k]) for row in cells) for k in range(len(header))]

    def line(row):
        first = row[0].ljust(widths[0])
        rest = [cell.rjust(width) for cell, width in zip(row[1:], widths[1:])]
        return "  ".join([first, *rest]).rstrip()

    rule = "  ".join("-" * w for w in widths)
    return "\n".join([line(cells[0]), rule, *(line(row) for row in cells[1:])])


def comparison_row(flight: Dict[str, Any]) -> List[str]:
    return [SCHEME_LABELS.get(flight["law"], flight["law"]), f"{flight['tof_days']:.1f}",
            f"{flight['fuel_kg']:.2f}", f"{flight['da_km']:.3f}", f"{flight['di_deg']:.3f}",
            f"{flight['draan_deg']:.3f}"]


def error_rows(flight: Dict[str, Any]) -> List[List[str]]:
    return [[str(leg["leg"]), f"{abs(leg['da_km']):.3f}", f"{abs(leg['di_deg']):.3f}",
             f"{abs(leg['draan_deg']):.3f}"] for leg in flight["legs"]]


class BuildReport:
    """Collects every available output of a mission directory into ``report.txt``."""

    def __call__(self, out: str, write: bool = True) -> Dict[str, Any]:
        """
        Raises
        ------
        ConfigError
            When the directory holds no tour record.
        """
        directory = Path(out)
        path = directory / SOLUTION_FILE
        if not path.exists():
            raise ConfigError(f"no tour record in {directory}; run plan first")
        tour = TourSolution.from_json(path)
        sections = [f"{tour.objective.capitalize()} optimal tour: delta-v and TOF per leg",
                    format_table(LEG_TABLE_HEADER, tour.leg_rows()),
                    f"Propellant: {tour.fuel:.2f} kg"]

        flights = []
        for law in (OPEN_LOOP, *LAWS):
            summary = directory / fly_summary_file(law)
            if summary.exists():
                with open(summary, "r", encoding="utf-8") as f:
                    flights.append(json.load(f))
        completed = [flight for flight in flights if "aborted" not in flight]
        for flight in flights:
            label = SCHEME_LABELS.get(flight["law"], flight["law"])
            if "aborted" in flight:
                sections.append(f"{label}: aborted on leg {flight.get('leg')}: "
                                f"{flight['aborted']}")
                continue
            sections += [f"{label}: errors at the end of each leg",
                         format_table(ERROR_HEADER, error_rows(flight))]
        if completed:
            sections += ["Guidance comparison",
                         format_table(COMPARISON_HEADER, [comparison_row(flight)
                                                          for flight in completed])]

        weights_path = directory / WEIGHTS_FILE
        if weights_path.exists():
            kinds = [leg.kind for leg in tour.transfer_legs()]
            for weights in load_weights(weights_path):
                rows = [[str(n)] + [f"{v:.6g}" for v in vector]
                        for n, vector in weights.table(kinds)]
                label = SCHEME_LABELS.get(weights.law, weights.law)
                sections += [f"{label}: tuned coefficients", format_table(WEIGHTS_HEADER, rows)]

        text = "\n\n".join(sections) + "\n"
        result: Dict[str, Any] = {"text": text, "flights": len(completed)}
        if write:
            (directory / REPORT_FILE).write_text(text, encoding="utf-8")
            result["report"] = str(directory / REPORT_FILE)
            logger.info("report written to %s", directory / REPORT_FILE)
        return result


build_report = BuildReport()
