"""
Physical environment and spacecraft description.

The environment bundles the gravity constants and a static piecewise-exponential
atmosphere. The default table is the exponential atmosphere of Vallado (Fundamentals
of Astrodynamics and Applications, table 8-4) from 100 km upwards; its last band
(base 1000 km) is extended to 2000 km.

Classes
-------
AtmosphereTable : Piecewise-exponential density bands.
Environment : Gravity constants plus the atmosphere.
SpacecraftConfig : Servicer propulsion and drag properties.
"""
import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

import numpy as np

from ..errors import AltitudeRangeError, ConfigError

MU_EARTH = 398600.4418
"""Earth gravitational parameter [km^3/s^2]."""
RE_EARTH = 6378.137
"""Earth equatorial radius [km]."""
J2_EARTH = 1.08263e-3
"""Earth second zonal harmonic [-]."""
G0 = 9.80665
"""Standard gravity [m/s^2]."""

MIN_TABLE_ALTITUDE = 100.0
MAX_TABLE_ALTITUDE = 2000.0

_VALLADO_BASE_KM = (100., 110., 120., 130., 140., 150., 180., 200., 250., 300., 350., 400.,
                    450., 500., 600., 700., 800., 900., 1000.)
_VALLADO_DENSITY = (5.297e-7, 9.661e-8, 2.438e-8, 8.484e-9, 3.845e-9, 2.070e-9, 5.464e-10,
                    2.789e-10, 7.248e-11, 2.418e-11, 9.518e-12, 3.725e-12, 1.585e-12,
                    6.967e-13, 1.454e-13, 3.614e-14, 1.170e-14, 5.245e-15, 3.019e-15)
_VALLADO_SCALE_KM = (5.877, 7.263, 9.473, 12.636, 16.149, 22.523, 29.740, 37.105, 45.546,
                     53.628, 53.298, 58.515, 60.828, 63.822, 71.835, 88.667, 124.64, 181.05,
                     268.00)


@dataclass(frozen=True, eq=False)
class AtmosphereTable:
    """
    Static piecewise-exponential atmosphere.

    Attributes
    ----------
    base_altitude : np.ndarray
        Band base altitudes [km], strictly increasing.
    base_density : np.ndarray
        Density at each base altitude [kg/m^3].
    scale_height : np.ndarray
        Scale height of each band [km].
    name : str
        Identity of the table, reported in logs and outputs.
    """
    base_altitude: np.ndarray
    base_density: np.ndarray
    scale_height: np.ndarray
    name: str = "vallado-exponential"

    def __post_init__(self):
        for attr in ("base_altitude", "base_density", "scale_height"):
            object.__setattr__(self, attr, np.asarray(getattr(self, attr), dtype=float))
        n = self.base_altitude.size
        if n == 0 or self.base_density.size != n or self.scale_height.size != n:
            raise ConfigError("atmosphere table columns must be non-empty and of equal length")
        if np.any(np.diff(self.base_altitude) <= 0.0):
            raise ConfigError("atmosphere base altitudes must be strictly increasing")
        if np.any(self.base_density <= 0.0) or np.any(self.scale_height <= 0.0):
            raise ConfigError("atmosphere densities and scale heights must be positive")

    @classmethod
    def default(cls) -> "AtmosphereTable":
        """Vallado exponential atmosphere from 100 km."""
        return cls(np.array(_VALLADO_BASE_KM), np.array(_VALLADO_DENSITY),
                   np.array(_VALLADO_SCALE_KM))

    @classmethod
    def from_csv(cls, path: Union[str, Path], encoding: str = "utf-8") -> "AtmosphereTable":
        """
        Load a table from a CSV file with columns
        ``altitude_km, density_kg_m3, scale_height_km``.

        Parameters
        ----------
        path : str or Path
            CSV file, header row required.
        encoding : str, optional
            File encoding.

        Returns
        -------
        AtmosphereTable
        """
        rows = []
        with open(path, "r", encoding=encoding, newline="") as f:
            for row in csv.DictReader(f):
                try:
                    rows.append((float(row["altitude_km"]), float(row["density_kg_m3"]),
                                 float(row["scale_height_km"])))
                except (KeyError, TypeError, ValueError) as exc:
                    raise ConfigError(f"malformed atmosphere row {row!r} in {path}") from exc
        if not rows:
            raise ConfigError(f"atmosphere table {path} has no rows")
        data = np.array(rows)
        return cls(data[:, 0], data[:, 1], data[:, 2], name=Path(path).stem)

    def density(self, altitude: float) -> float:
        """
        Density at a geometric altitude.

        Parameters
        ----------
        altitude : float
            Altitude above the equatorial radius [km].

        Returns
        -------
        float
            Density [kg/m^3].

        Raises
        ------
        AltitudeRangeError
            If the altitude is outside [100, 2000] km or below the first band.
        """
        if not MIN_TABLE_ALTITUDE <= altitude <= MAX_TABLE_ALTITUDE \
                or altitude < self.base_altitude[0]:
            raise AltitudeRangeError(
                f"altitude {altitude:.3f} km outside atmosphere range "
                f"[{max(MIN_TABLE_ALTITUDE, self.base_altitude[0]):.0f}, "
                f"{MAX_TABLE_ALTITUDE:.0f}] km")
        k = int(np.searchsorted(self.base_altitude, altitude, side="right")) - 1
        return float(self.base_density[k]
                     * np.exp(-(altitude - self.base_altitude[k]) / self.scale_height[k]))


@dataclass(frozen=True)
class Environment:
    """
    Central-body constants and atmosphere.

    Attributes
    ----------
    mu : float
        Gravitational parameter [km^3/s^2].
    re : float
        Equatorial radius [km].
    j2 : float
        Second zonal harmonic [-].
    g0 : float
        Standard gravity [m/s^2].
    atmosphere : AtmosphereTable or None
        Density model; ``None`` is a vacuum (zero density inside the table range).
    """
    mu: float = MU_EARTH
    re: float = RE_EARTH
    j2: float = J2_EARTH
    g0: float = G0
    atmosphere: Optional[AtmosphereTable] = field(default_factory=AtmosphereTable.default)

    def __post_init__(self):
        if self.mu <= 0.0 or self.re <= 0.0 or self.g0 <= 0.0:
            raise ConfigError("mu, re and g0 must be positive")
        if self.j2 < 0.0:
            raise ConfigError("j2 must be non-negative")

    def density(self, altitude: float) -> float:
        """Atmospheric density [kg/m^3] at ``altitude`` [km]; range-checked even in vacuum."""
        if self.atmosphere is None:
            if not MIN_TABLE_ALTITUDE <= altitude <= MAX_TABLE_ALTITUDE:
                raise AltitudeRangeError(
                    f"altitude {altitude:.3f} km outside atmosphere range "
                    f"[{MIN_TABLE_ALTITUDE:.0f}, {MAX_TABLE_ALTITUDE:.0f}] km")
            return 0.0
        return self.atmosphere.density(altitude)

    def with_vacuum(self) -> "Environment":
        """Same constants without an atmosphere."""
        return Environment(self.mu, self.re, self.j2, self.g0, None)

    def circular_speed(self, a: float) -> float:
        """Circular orbital speed at radius ``a`` [km/s]."""
        return float(np.sqrt(self.mu / a))

    def circular_radius(self, v: float) -> float:
        """Radius of the circular orbit with speed ``v`` [km]."""
        return self.mu / (v * v)


@dataclass(frozen=True)
class SpacecraftConfig:
    """
    Servicer propulsion and drag properties.

    Attributes
    ----------
    wet_mass : float
        Launch mass [kg].
    max_thrust : float
        Maximum thrust [N].
    isp : float
        Specific impulse [s].
    duty_ratio : float
        Maximum fraction of an orbit the thruster may fire, in (0, 1].
    drag_coefficient : float
        Cd [-].
    frontal_area : float
        Reference area [m^2].
    dry_mass : float, optional
        Mass floor [kg]; defaults to half the wet mass.
    """
    wet_mass: float = 800.0
    max_thrust: float = 0.060
    isp: float = 1300.0
    duty_ratio: float = 0.5
    drag_coefficient: float = 2.2
    frontal_area: float = 1.0
    dry_mass: Optional[float] = None

    def __post_init__(self):
        for name in ("wet_mass", "max_thrust", "isp", "duty_ratio", "drag_coefficient",
                     "frontal_area"):
            if not getattr(self, name) > 0.0:
                raise ConfigError(f"spacecraft {name} must be strictly positive")
        if self.duty_ratio > 1.0:
            raise ConfigError("duty ratio must not exceed 1")
        if self.dry_mass is None:
            object.__setattr__(self, "dry_mass", 0.5 * self.wet_mass)
        if not 0.0 < self.dry_mass < self.wet_mass:
            raise ConfigError("dry mass must be positive and below the wet mass")

    def exhaust_velocity(self, g0: float = G0) -> float:
        """Effective exhaust velocity Isp*g0 [km/s]."""
        return self.isp * g0 / 1000.0

    def mass_after(self, mass: float, dv: float, g0: float = G0) -> float:
        """Mass after spending ``dv`` [km/s] from ``mass`` (rocket equation)."""
        return float(mass * np.exp(-dv / self.exhaust_velocity(g0)))

    def ballistic_coefficient(self) -> float:
        """Cd*A [m^2]; divide by mass for the Cd*A/m used by drag."""
        return self.drag_coefficient * self.frontal_area
