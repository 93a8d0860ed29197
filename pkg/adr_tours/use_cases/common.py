"""
Inputs and output layout shared by the mission use cases.

A use case accepts its configuration as a MissionConfig, a mapping or a file path, and the
debris catalog as a list of records, element-set text or a file path, so the same callables
serve the command line and the HTTP service.
"""
import csv
from pathlib import Path
from typing import Any, Iterable, List, Mapping, Optional, Sequence, Union

from ..catalog.tle import DebrisRecord, parse_tle, read_catalog
from ..config.mission import MissionConfig, load_mission_config
from ..errors import ConfigError
from ..guidance.weights import LAWS
from ..propagator.config import OPEN_LOOP

SOLUTION_FILE = "solution.json"
LEGS_FILE = "legs.csv"
PROFILE_DIR = "profiles"
COMPARISON_FILE = "comparison.csv"
WEIGHTS_FILE = "weights.yml"
REPORT_FILE = "report.txt"
ALL_LAWS = "all"

ConfigSource = Union[MissionConfig, Mapping[str, Any], str, Path]
CatalogSource = Union[Sequence[DebrisRecord], str, Path]


def resolve_config(config: ConfigSource, objective: Optional[str] = None,
                   seed: Optional[int] = None,
                   out: Optional[Union[str, Path]] = None) -> MissionConfig:
    """MissionConfig from any accepted source, with the command-line overrides applied."""
    if isinstance(config, MissionConfig):
        resolved = config
    elif isinstance(config, Mapping):
        resolved = MissionConfig.from_dict(config)
    elif isinstance(config, (str, Path)):
        resolved = load_mission_config(config)
    else:
        raise ConfigError(f"unsupported configuration source {type(config).__name__}")
    return resolved.with_objective(objective).with_seed(seed).with_output_dir(out)


def resolve_catalog(catalog: CatalogSource) -> List[DebrisRecord]:
    """Records from a list, element-set text (anything with a line break) or a file path."""
    if isinstance(catalog, Path):
        return read_catalog(catalog)
    if isinstance(catalog, str):
        return parse_tle(catalog) if "\n" in catalog else read_catalog(catalog)
    return list(catalog)


def resolve_laws(law: Optional[str], default: str) -> List[str]:
    """Law names for ``law``; ``all`` expands to open loop plus every guidance law."""
    name = law or default
    if name == ALL_LAWS:
        return [OPEN_LOOP, *LAWS]
    if name == "openloop":
        name = OPEN_LOOP
    if name not in LAWS + (OPEN_LOOP,):
        raise ConfigError(f"unknown law {name!r}; expected one of {LAWS + (OPEN_LOOP,)} "
                          f"or {ALL_LAWS!r}")
    return [name]


def output_dir(config: MissionConfig) -> Path:
    path = Path(config.output_dir)
    path.mkdir(parents=True, exist_ok=True)
    return path


def write_rows(path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(header)
        writer.writerows(rows)


def fly_summary_file(law: str) -> str:
    return f"fly_{law}.json"


def fly_errors_file(law: str) -> str:
    return f"fly_{law}_errors.csv"
