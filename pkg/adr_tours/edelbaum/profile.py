"""
Reference trajectory container produced by the mission design tool.

Classes
-------
TransferProfile : Sampled a, i, RAAN, cumulative delta-v, mass, yaw and throttle history.
ProfileSample : Values of a profile interpolated at one epoch.

Dependencies
------------
- numpy
- csv (profile export)
"""
import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Union

import numpy as np

from ..astro.elements import wrap_2pi
from ..errors import ConfigError

PROFILE_COLUMNS = ("t", "a", "i", "raan", "dv_cum", "mass", "beta", "w")
PROFILE_KINDS = ("thrust", "drift", "dwell")


@dataclass(frozen=True)
class ProfileSample:
    """Profile values at one epoch; ``raan`` is wrapped to [0, 2*pi)."""
    t: float
    a: float
    i: float
    raan: float
    dv_cum: float
    mass: float
    beta: float
    w: float


@dataclass(frozen=True, eq=False)
class TransferProfile:
    """
    Sampled reference of one transfer segment.

    Attributes
    ----------
    t : np.ndarray
        Epochs [s since J2000], strictly increasing (a single sample is allowed for an
        empty transfer).
    a, i : np.ndarray
        Semi-major axis [km] and inclination [rad].
    raan : np.ndarray
        RAAN [rad], stored unwrapped so it can be interpolated linearly.
    dv_cum : np.ndarray
        Cumulative delta-v since the first sample [km/s].
    mass : np.ndarray
        Spacecraft mass [kg].
    beta : np.ndarray
        Edelbaum yaw angle [rad] (zero on drift and dwell segments).
    w : np.ndarray
        Throttle fraction of the orbit used to thrust.
    kind : str
        ``thrust``, ``drift`` or ``dwell``.
    plane_change_sign : int
        Sign of the inclination change (+1, -1 or 0).
    """
    t: np.ndarray
    a: np.ndarray
    i: np.ndarray
    raan: np.ndarray
    dv_cum: np.ndarray
    mass: np.ndarray
    beta: np.ndarray
    w: np.ndarray
    kind: str = "thrust"
    plane_change_sign: int = 0
    restarts: int = 0

    def __post_init__(self):
        for name in PROFILE_COLUMNS:
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float))
        n = self.t.size
        if n == 0 or any(getattr(self, c).shape != (n,) for c in PROFILE_COLUMNS):
            raise ConfigError("profile columns must be 1-D, non-empty and equally long")
        if np.any(np.diff(self.t) <= 0.0):
            raise ConfigError("profile epochs must be strictly increasing")
        if self.kind not in PROFILE_KINDS:
            raise ConfigError(f"unknown profile kind {self.kind!r}")

    @property
    def tof(self) -> float:
        """Time of flight [s]."""
        return float(self.t[-1] - self.t[0])

    @property
    def dv_total(self) -> float:
        """Delta-v [km/s]."""
        return float(self.dv_cum[-1] - self.dv_cum[0])

    @property
    def start_epoch(self) -> float:
        return float(self.t[0])

    @property
    def end_epoch(self) -> float:
        return float(self.t[-1])

    def __len__(self) -> int:
        return int(self.t.size)

    def sample(self, epoch: float) -> ProfileSample:
        """Linear interpolation in time, clamped to the first and last samples."""
        values = {name: float(np.interp(epoch, self.t, getattr(self, name)))
                  for name in PROFILE_COLUMNS[1:]}
        values["raan"] = wrap_2pi(values["raan"])
        return ProfileSample(t=float(epoch), **values)

    def start(self) -> ProfileSample:
        return self.sample(self.start_epoch)

    def end(self) -> ProfileSample:
        return self.sample(self.end_epoch)

    def shifted(self, dt: float = 0.0, ddv: float = 0.0, draan: float = 0.0,
                dmass: float = 0.0) -> "TransferProfile":
        """Copy with epochs, cumulative delta-v, RAAN and mass offset by constants."""
        return TransferProfile(self.t + dt, self.a, self.i, self.raan + draan, self.dv_cum + ddv,
                               self.mass + dmass, self.beta, self.w, self.kind,
                               self.plane_change_sign, self.restarts)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {name: getattr(self, name).tolist() for name in PROFILE_COLUMNS}
        data["kind"] = self.kind
        data["plane_change_sign"] = self.plane_change_sign
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TransferProfile":
        try:
            return cls(*(data[name] for name in PROFILE_COLUMNS), kind=data.get("kind", "thrust"),
                       plane_change_sign=int(data.get("plane_change_sign", 0)))
        except KeyError as exc:
            raise ConfigError(f"profile record is missing column {exc}") from exc

    def to_csv(self, path: Union[str, Path]) -> None:
        """
        Write one row per sample with columns ``t_s, a_km, i_deg, raan_deg, dv_m_s,
        mass_kg, beta_deg, w``.
        """
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(["t_s", "a_km", "i_deg", "raan_deg", "dv_m_s", "mass_kg",
                             "beta_deg", "w"])
            for k in range(len(self)):
                writer.writerow([
                    f"{self.t[k]:.3f}", f"{self.a[k]:.6f}", f"{math.degrees(self.i[k]):.8f}",
                    f"{math.degrees(self.raan[k]):.8f}", f"{self.dv_cum[k] * 1000.0:.6f}",
                    f"{self.mass[k]:.6f}", f"{math.degrees(self.beta[k]):.6f}",
                    f"{self.w[k]:.6f}"])
