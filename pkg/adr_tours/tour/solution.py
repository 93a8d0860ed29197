"""
Assembled tour: ordered legs, mass ledger and exports.

Classes
-------
TourLeg : One leg (deorbit, handover, rendezvous or proximity) with its segments.
TourSolution : Ordered legs, decision vector and totals.

Dependencies
------------
- numpy
- csv, json (exports)
"""
import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..astro.elements import ClassicalElements
from ..astro.epochs import SECONDS_PER_DAY, format_epoch
from ..edelbaum.profile import TransferProfile
from ..errors import ConfigError
from ..raan_match.drift import DriftOrbit

LEG_KINDS = ("deorbit", "handover", "rendezvous", "proximity")
TRANSFER_KINDS = ("deorbit", "rendezvous")
LEG_TABLE_HEADER = ("Leg", "Delta-v (m/s)", "TOF (days)")


def _elements_to_dict(el: ClassicalElements) -> Dict[str, float]:
    return {"a": el.a, "e": el.e, "i": el.i, "raan": el.raan, "argp": el.argp, "nu": el.nu,
            "epoch": el.epoch}


def _elements_from_dict(data: Dict[str, float]) -> ClassicalElements:
    return ClassicalElements(**{k: float(v) for k, v in data.items()})


@dataclass(frozen=True, eq=False)
class TourLeg:
    """
    Attributes
    ----------
    kind : str
        One of ``deorbit``, ``handover``, ``rendezvous``, ``proximity``.
    label : str
        Row label of the per-leg table.
    debris : str
        Debris object the leg serves.
    segments : tuple of TransferProfile
        Reference segments in flight order.
    mass_start, mass_end : float
        Servicer mass [kg] (debris excluded) at both ends.
    carried_mass : float
        Debris mass [kg] attached during the leg.
    end_elements : ClassicalElements
        Mean elements reached at the end of the leg.
    number : int, optional
        Transfer leg number (1-based) for deorbit and rendezvous legs.
    drift : DriftOrbit, optional
        Drift orbit of a rendezvous leg.
    carried_area : float
        Cd*A [m^2] of the attached debris.
    """
    kind: str
    label: str
    debris: str
    segments: Tuple[TransferProfile, ...]
    mass_start: float
    mass_end: float
    carried_mass: float
    end_elements: ClassicalElements
    number: Optional[int] = None
    drift: Optional[DriftOrbit] = None
    carried_area: float = 0.0

    def __post_init__(self):
        if self.kind not in LEG_KINDS:
            raise ConfigError(f"unknown leg kind {self.kind!r}")
        object.__setattr__(self, "segments", tuple(self.segments))
        if not self.segments:
            raise ConfigError("a leg needs at least one segment")

    @property
    def is_transfer(self) -> bool:
        return self.kind in TRANSFER_KINDS

    @property
    def start_epoch(self) -> float:
        return self.segments[0].start_epoch

    @property
    def end_epoch(self) -> float:
        return self.segments[-1].end_epoch

    @property
    def tof(self) -> float:
        """[s]"""
        return self.end_epoch - self.start_epoch

    @property
    def dv(self) -> float:
        """[km/s]"""
        return sum(s.dv_total for s in self.segments)

    @property
    def fuel(self) -> float:
        """[kg]"""
        return self.mass_start - self.mass_end

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind, "label": self.label, "debris": self.debris,
            "number": self.number,
            "drift": None if self.drift is None else {"v_d": self.drift.v_d, "i_d": self.drift.i_d},
            "mass_start": self.mass_start, "mass_end": self.mass_end,
            "carried_mass": self.carried_mass, "carried_area": self.carried_area,
            "dv_m_s": self.dv * 1000.0, "tof_days": self.tof / SECONDS_PER_DAY,
            "end_elements": _elements_to_dict(self.end_elements),
            "segments": [s.to_dict() for s in self.segments],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TourLeg":
        try:
            drift = data.get("drift")
            return cls(kind=data["kind"], label=data["label"], debris=data["debris"],
                       segments=tuple(TransferProfile.from_dict(s) for s in data["segments"]),
                       mass_start=float(data["mass_start"]), mass_end=float(data["mass_end"]),
                       carried_mass=float(data.get("carried_mass", 0.0)),
                       end_elements=_elements_from_dict(data["end_elements"]),
                       number=data.get("number"),
                       drift=None if drift is None else DriftOrbit(drift["v_d"], drift["i_d"]),
                       carried_area=float(data.get("carried_area", 0.0)))
        except KeyError as exc:
            raise ConfigError(f"leg record is missing field {exc}") from exc


@dataclass(frozen=True, eq=False)
class TourSolution:
    """
    Attributes
    ----------
    legs : tuple of TourLeg
    x : tuple of float
        Decision vector the tour was evaluated at.
    objective : str
        ``fuel`` or ``time``.
    launch_epoch : float
        Epoch of the first leg [s since J2000].
    constraint_bound : float, optional
        TOF bound [s] for fuel tours, delta-v bound [km/s] for time tours.
    """
    legs: Tuple[TourLeg, ...]
    x: Tuple[float, ...] = ()
    objective: str = "fuel"
    launch_epoch: float = 0.0
    constraint_bound: Optional[float] = None
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "legs", tuple(self.legs))
        object.__setattr__(self, "x", tuple(float(v) for v in self.x))

    @property
    def dv(self) -> float:
        """Total delta-v [km/s]."""
        return sum(leg.dv for leg in self.legs)

    @property
    def tof(self) -> float:
        """Total time of flight [s]."""
        return sum(leg.tof for leg in self.legs)

    @property
    def fuel(self) -> float:
        """Total propellant [kg]."""
        return sum(leg.fuel for leg in self.legs)

    @property
    def final_mass(self) -> float:
        return self.legs[-1].mass_end

    def transfer_legs(self) -> List[TourLeg]:
        return [leg for leg in self.legs if leg.is_transfer]

    def segments(self) -> List[TransferProfile]:
        return [s for leg in self.legs for s in leg.segments]

    @property
    def objective_value(self) -> float:
        """Delta-v [km/s] for fuel tours, TOF [s] for time tours."""
        return self.dv if self.objective == "fuel" else self.tof

    @property
    def constraint_value(self) -> float:
        return self.tof if self.objective == "fuel" else self.dv

    def constraint_violation(self) -> float:
        """Relative excess over the bound; 0 when satisfied or unbounded."""
        if self.constraint_bound is None:
            return 0.0
        return max(0.0, self.constraint_value / self.constraint_bound - 1.0)

    def constraint_active(self, rel_tol: float = 1e-3) -> bool:
        if self.constraint_bound is None:
            return False
        return abs(self.constraint_value / self.constraint_bound - 1.0) <= rel_tol

    def leg_rows(self) -> List[Tuple[str, str, str]]:
        """Rows of the per-leg table: label, delta-v [m/s] (``-`` for dwells), TOF [d]."""
        rows = []
        for leg in self.legs:
            dv = f"{leg.dv * 1000.0:.2f}" if leg.is_transfer else "-"
            rows.append((leg.label, dv, f"{leg.tof / SECONDS_PER_DAY:.2f}"))
        rows.append(("Total", f"{self.dv * 1000.0:.2f}", f"{self.tof / SECONDS_PER_DAY:.2f}"))
        return rows

    def to_csv(self, path: Union[str, Path]) -> None:
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(LEG_TABLE_HEADER)
            writer.writerows(self.leg_rows())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "objective": self.objective,
            "x": list(self.x),
            "launch_epoch": self.launch_epoch,
            "launch_date": format_epoch(self.launch_epoch),
            "constraint_bound": self.constraint_bound,
            "totals": {"dv_m_s": self.dv * 1000.0, "tof_days": self.tof / SECONDS_PER_DAY,
                       "fuel_kg": self.fuel},
            "metadata": dict(self.metadata),
            "legs": [leg.to_dict() for leg in self.legs],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TourSolution":
        try:
            return cls(legs=tuple(TourLeg.from_dict(leg) for leg in data["legs"]),
                       x=tuple(data.get("x", ())), objective=data.get("objective", "fuel"),
                       launch_epoch=float(data.get("launch_epoch", 0.0)),
                       constraint_bound=data.get("constraint_bound"),
                       metadata=dict(data.get("metadata", {})))
        except KeyError as exc:
            raise ConfigError(f"tour record is missing field {exc}") from exc

    def to_json(self, path: Union[str, Path]) -> None:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.to_dict(), f, indent=2)

    @classmethod
    def from_json(cls, path: Union[str, Path]) -> "TourSolution":
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read tour file {path}: {exc}") from exc
        return cls.from_dict(data)


def rocket_fuel(mass0: float, dv: float, exhaust_velocity: float) -> float:
    """Propellant [kg] burned by ``mass0`` for ``dv`` [km/s] at ``exhaust_velocity`` [km/s]."""
    return mass0 * (1.0 - math.exp(-dv / exhaust_velocity))


def leg_labels(kinds: Sequence[str], names: Sequence[str], shepherd_altitude: float) -> List[str]:
    """Table labels for legs of the given kinds serving the given debris names."""
    labels = []
    number = 0
    for kind, name in zip(kinds, names):
        if kind == "deorbit":
            number += 1
            labels.append(f"Leg {number} (from {name} to {shepherd_altitude:.0f} km orbit)")
        elif kind == "rendezvous":
            number += 1
            labels.append(f"Leg {number} (from {shepherd_altitude:.0f} km orbit to {name})")
        elif kind == "handover":
            labels.append("Handover")
        else:
            labels.append("Proximity Operations")
    return labels
