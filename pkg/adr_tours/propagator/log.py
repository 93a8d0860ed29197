"""
Trajectory log of one propagated leg and its exports.

Classes
-------
TerminalErrors : Mean-element deviation from the reference end point.
TrajectoryLog : Time series and summary of a propagated leg.
"""
import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import numpy as np

from ..astro.epochs import SECONDS_PER_DAY

ELEMENT_NAMES = ("a", "e", "i", "raan", "argp", "nu")


@dataclass(frozen=True)
class TerminalErrors:
    """
    Attributes
    ----------
    da : float
        [km]
    di, draan : float
        [deg]; RAAN on the minor arc.
    """
    da: float
    di: float
    draan: float

    def absolute(self) -> "TerminalErrors":
        return TerminalErrors(abs(self.da), abs(self.di), abs(self.draan))

    def within(self, da: float = 20.0, di: float = 0.1, draan: float = 1.0) -> bool:
        return abs(self.da) < da and abs(self.di) < di and abs(self.draan) < draan

    def to_dict(self) -> Dict[str, float]:
        return {"da_km": self.da, "di_deg": self.di, "draan_deg": self.draan}


@dataclass(frozen=True, eq=False)
class TrajectoryLog:
    """
    Attributes
    ----------
    law : str
    t : np.ndarray
        [s since J2000]
    osculating, mean : np.ndarray
        (n, 6) element histories (a, e, i, RAAN, argp, nu).
    mass : np.ndarray
        Stack mass [kg].
    dv : np.ndarray
        Delta-v integral [km/s].
    throttle : np.ndarray
        Gate value of the interval starting at each row.
    scalar : np.ndarray
        Lyapunov value of the law (NaN when the law has none).
    direction : np.ndarray
        (n, 3) commanded unit direction (radial, along, cross).
    errors : TerminalErrors
    leg_index : int, optional
    isp_g0 : float
        Exhaust velocity [km/s] the mass flow used.
    """
    law: str
    t: np.ndarray
    osculating: np.ndarray
    mean: np.ndarray
    mass: np.ndarray
    dv: np.ndarray
    throttle: np.ndarray
    scalar: np.ndarray
    direction: np.ndarray
    errors: TerminalErrors
    leg_index: Optional[int] = None
    isp_g0: float = 0.0
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def tof(self) -> float:
        return float(self.t[-1] - self.t[0])

    @property
    def fuel(self) -> float:
        return float(self.mass[0] - self.mass[-1])

    @property
    def dv_total(self) -> float:
        return float(self.dv[-1] - self.dv[0])

    def duty(self) -> float:
        """Fraction of logged intervals with thrust allowed."""
        return float(np.mean(self.throttle[:-1])) if self.t.size > 1 else 0.0

    def rocket_consistency(self) -> float:
        """Relative gap between the logged fuel and the rocket equation on the dv integral."""
        if self.isp_g0 <= 0.0 or self.fuel == 0.0:
            return 0.0
        expected = self.mass[0] * (1.0 - math.exp(-self.dv_total / self.isp_g0))
        return abs(self.fuel - expected) / expected

    def summary(self) -> Dict[str, Any]:
        return {
            "law": self.law, "leg": self.leg_index,
            "tof_days": self.tof / SECONDS_PER_DAY, "fuel_kg": self.fuel,
            "dv_m_s": self.dv_total * 1000.0, **self.errors.to_dict(),
        }

    def to_csv(self, path: Union[str, Path]) -> None:
        header: List[str] = ["t_s"]
        header += [f"osc_{n}" for n in ELEMENT_NAMES] + [f"mean_{n}" for n in ELEMENT_NAMES]
        header += ["mass_kg", "dv_m_s", "throttle", "scalar", "u_r", "u_t", "u_n"]
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(header)
            for k in range(self.t.size):
                row = [f"{self.t[k]:.3f}"]
                row += [f"{v:.10g}" for v in self.osculating[k]]
                row += [f"{v:.10g}" for v in self.mean[k]]
                row += [f"{self.mass[k]:.6f}", f"{self.dv[k] * 1000.0:.6f}",
                        f"{self.throttle[k]:.0f}", f"{self.scalar[k]:.8g}"]
                row += [f"{v:.6f}" for v in self.direction[k]]
                writer.writerow(row)

    def to_json(self, path: Union[str, Path]) -> None:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.summary(), f, indent=2)


class LogBuilder:
    """Row accumulator producing a TrajectoryLog."""

    def __init__(self):
        self.rows: Dict[str, list] = {k: [] for k in ("t", "osculating", "mean", "mass", "dv",
                                                      "throttle", "scalar", "direction")}

    def append(self, t, osculating, mean, mass, dv, throttle, scalar, direction) -> None:
        for key, value in zip(self.rows, (t, osculating, mean, mass, dv, throttle, scalar,
                                          direction)):
            self.rows[key].append(value)

    def __len__(self) -> int:
        return len(self.rows["t"])

    def last_time(self) -> Optional[float]:
        return self.rows["t"][-1] if self.rows["t"] else None

    def build(self, law: str, errors: TerminalErrors, leg_index: Optional[int],
              isp_g0: float) -> TrajectoryLog:
        arrays = {k: np.array(v, dtype=float) for k, v in self.rows.items()}
        return TrajectoryLog(law=law, errors=errors, leg_index=leg_index, isp_g0=isp_g0,
                             **arrays)


def elements_row(el) -> List[float]:
    return [el.a, el.e, el.i, el.raan, el.argp, el.nu]
