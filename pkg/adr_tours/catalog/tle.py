"""
Two-line element sets: fixed-column parsing, checksums and conversion to debris targets.

Classes
-------
DebrisRecord : One decoded element set.

Element sets are read as mean elements; the semi-major axis comes from the mean motion by
Kepler's third law.
"""
import logging
import math
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from pathlib import Path
from typing import List, Optional, Sequence, Union

from ..astro.elements import ClassicalElements, mean_to_true
from ..astro.environment import Environment
from ..astro.epochs import epoch_from_datetime
from ..errors import CatalogParseError
from ..tour.definition import DebrisTarget

logger = logging.getLogger(__name__)

LINE_LENGTH = 69
BSTAR_REFERENCE_DENSITY = 0.15696615
"""Reference density of B* [kg m^-2 per Earth radius]."""


def line_checksum(line: str) -> int:
    """Digits summed with one for every minus sign, over the first 68 columns, modulo 10."""
    total = 0
    for c in line[:68]:
        if c.isdigit():
            total += int(c)
        elif c == "-":
            total += 1
    return total % 10


def _implied_exponent(field: str, line_number: int, name: str) -> float:
    """Decode ``" 12345-4"`` style fields: sign, implied leading decimal point, exponent."""
    text = field.strip()
    if not text:
        return 0.0
    sign = -1.0 if text[0] == "-" else 1.0
    text = text.lstrip("+-")
    mantissa, exponent = text[:-2], text[-2:]
    try:
        return sign * float(f"0.{mantissa.strip()}e{exponent}")
    except ValueError:
        raise CatalogParseError(f"malformed {name} field {field!r}", line_number) from None


def _number(field: str, line_number: int, name: str, cast=float):
    try:
        return cast(field.strip())
    except ValueError:
        raise CatalogParseError(f"malformed {name} field {field!r}", line_number) from None


def _epoch(field: str, line_number: int) -> float:
    year = _number(field[:2], line_number, "epoch year", int)
    day = _number(field[2:], line_number, "epoch day")
    if not 1.0 <= day < 367.0:
        raise CatalogParseError(f"epoch day {day} out of range", line_number)
    year += 2000 if year < 57 else 1900
    moment = datetime(year, 1, 1, tzinfo=timezone.utc) + timedelta(days=day - 1.0)
    return epoch_from_datetime(moment)


@dataclass(frozen=True)
class DebrisRecord:
    """
    Attributes
    ----------
    name : str
    catalog_id : int
    epoch : float
        [s since J2000]
    mean_motion : float
        [rev/day]
    inclination, raan, argp, mean_anomaly : float
        [deg]
    eccentricity : float
    bstar : float
        [1/Earth radii]
    international_designator : str
    """
    name: str
    catalog_id: int
    epoch: float
    mean_motion: float
    inclination: float
    raan: float
    eccentricity: float
    argp: float
    mean_anomaly: float
    bstar: float = 0.0
    international_designator: str = ""

    def semi_major_axis(self, env: Optional[Environment] = None) -> float:
        """[km]"""
        mu = (env or Environment()).mu
        n = self.mean_motion * 2.0 * math.pi / 86400.0
        return (mu / (n * n)) ** (1.0 / 3.0)

    def elements(self, env: Optional[Environment] = None) -> ClassicalElements:
        """Mean classical elements at the record epoch."""
        e = self.eccentricity
        return ClassicalElements(
            a=self.semi_major_axis(env), e=e, i=math.radians(self.inclination),
            raan=math.radians(self.raan), argp=math.radians(self.argp),
            nu=mean_to_true(math.radians(self.mean_anomaly), e), epoch=self.epoch)

    def ballistic_coefficient(self) -> float:
        """Cd*A/m [m^2/kg] implied by B*."""
        return max(0.0, 2.0 * self.bstar / BSTAR_REFERENCE_DENSITY)

    def to_target(self, mass: float, env: Optional[Environment] = None,
                  area_coefficient: Optional[float] = None) -> DebrisTarget:
        """
        Debris target with the record's elements.

        Parameters
        ----------
        mass : float
            Debris mass [kg].
        area_coefficient : float, optional
            Cd*A [m^2]; derived from B* and ``mass`` when omitted.
        """
        if area_coefficient is None:
            area_coefficient = self.ballistic_coefficient() * mass
        return DebrisTarget(self.name, self.elements(env), mass, area_coefficient,
                            self.catalog_id)


def _check_line(line: str, number: str, line_number: int) -> None:
    if len(line) < LINE_LENGTH:
        raise CatalogParseError(
            f"element-set line {number} has {len(line)} columns, expected {LINE_LENGTH}",
            line_number)
    if line[0] != number or line[1] != " ":
        raise CatalogParseError(f"expected element-set line {number}", line_number)
    expected = line[68]
    if not expected.isdigit() or int(expected) != line_checksum(line):
        raise CatalogParseError(
            f"checksum mismatch: computed {line_checksum(line)}, found {expected!r}",
            line_number)


def _decode(name: str, line1: str, line2: str, first: int) -> DebrisRecord:
    """``first`` is the file line number of ``line1``."""
    _check_line(line1, "1", first)
    _check_line(line2, "2", first + 1)
    if line1[2:7] != line2[2:7]:
        raise CatalogParseError(
            f"catalog number {line1[2:7].strip()!r} does not match line 2 "
            f"{line2[2:7].strip()!r}", first + 1)
    catalog_id = _number(line1[2:7], first, "catalog number", int)
    second = first + 1
    inclination = _number(line2[8:16], second, "inclination")
    raan = _number(line2[17:25], second, "RAAN")
    eccentricity = _number("0." + line2[26:33].strip(), second, "eccentricity")
    argp = _number(line2[34:42], second, "argument of perigee")
    mean_anomaly = _number(line2[43:51], second, "mean anomaly")
    mean_motion = _number(line2[52:63], second, "mean motion")
    if not 0.0 <= inclination <= 180.0:
        raise CatalogParseError(f"inclination {inclination} outside [0, 180] deg", second)
    for label, value in (("RAAN", raan), ("argument of perigee", argp),
                         ("mean anomaly", mean_anomaly)):
        if not 0.0 <= value < 360.0:
            raise CatalogParseError(f"{label} {value} outside [0, 360) deg", second)
    if not mean_motion > 0.0:
        raise CatalogParseError(f"mean motion must be positive, got {mean_motion}", second)
    return DebrisRecord(
        name=name or line1[2:7].strip(), catalog_id=catalog_id,
        epoch=_epoch(line1[18:32], first), mean_motion=mean_motion, inclination=inclination,
        raan=raan, eccentricity=eccentricity, argp=argp, mean_anomaly=mean_anomaly,
        bstar=_implied_exponent(line1[53:61], first, "B*"),
        international_designator=line1[9:17].strip())


def parse_tle(text: str) -> List[DebrisRecord]:
    """
    Parse two-line or named three-line element sets.

    Blank lines are skipped; a name line may carry the ``0 `` prefix.

    Raises
    ------
    CatalogParseError
        On checksum, column or range errors, with the offending line number.
    """
    lines = [(n, raw.rstrip("\r\n").rstrip()) for n, raw in enumerate(text.splitlines(), 1)]
    lines = [(n, line) for n, line in lines if line.strip()]
    records: List[DebrisRecord] = []
    k = 0
    while k < len(lines):
        n, line = lines[k]
        name = ""
        if not line.startswith("1 "):
            name = line[2:].strip() if line.startswith("0 ") else line.strip()
            k += 1
            if k >= len(lines):
                raise CatalogParseError(f"name {name!r} is not followed by an element set", n)
            n, line = lines[k]
        if k + 1 >= len(lines):
            raise CatalogParseError("element-set line 1 without line 2", n)
        line2_number, line2 = lines[k + 1]
        if line2_number != n + 1:
            raise CatalogParseError("element-set lines must be consecutive", line2_number)
        records.append(_decode(name, line, line2, n))
        k += 2
    logger.debug("parsed %d element sets", len(records))
    return records


def read_catalog(path: Union[str, Path], encoding: str = "utf-8") -> List[DebrisRecord]:
    try:
        text = Path(path).read_text(encoding=encoding)
    except OSError as exc:
        raise CatalogParseError(f"cannot read catalog {path}: {exc}") from exc
    return parse_tle(text)


def select_records(records: Sequence[DebrisRecord], keys: Sequence[Union[str, int]]
                   ) -> List[DebrisRecord]:
    """
    Records in the order of ``keys``, each matched by catalog id or name.

    Raises
    ------
    CatalogParseError
        If a key matches no record.
    """
    selected = []
    for key in keys:
        for record in records:
            if str(key) in (str(record.catalog_id), record.name):
                selected.append(record)
                break
        else:
            raise CatalogParseError(f"debris {key!r} not found in catalog")
    return selected
