"""
Tour inputs: the debris sequence, the servicer and the optimisation problem.

Classes
-------
DebrisTarget : One debris object with its mean orbit, mass and drag area.
TourDefinition : Everything needed to evaluate or optimise a tour.
DecisionLayout : Mapping between the optimisation vector and drift orbits.
"""
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import solve_ivp

from ..astro.elements import ClassicalElements
from ..astro.environment import Environment, SpacecraftConfig
from ..astro.perturbations import circular_drag_decay_rate, j2_raan_rate
from ..edelbaum.extended import DEFAULT_SEGMENTS, ExtendedEdelbaumOptions
from ..errors import ConfigError, DomainError
from ..raan_match.drift import DriftOrbit

DAY = 86400.0
OBJECTIVES = ("fuel", "time")
_DECAY_STEP = DAY


@dataclass(frozen=True)
class DebrisTarget:
    """
    Attributes
    ----------
    name : str
    elements : ClassicalElements
        Mean elements at ``elements.epoch``.
    mass : float
        [kg]
    area_coefficient : float
        Cd*A [m^2] of the debris, added to the servicer's when attached.
    catalog_id : int, optional
    """
    name: str
    elements: ClassicalElements
    mass: float
    area_coefficient: float = 0.0
    catalog_id: Optional[int] = None

    def __post_init__(self):
        if self.mass < 0.0 or self.area_coefficient < 0.0:
            raise ConfigError(f"debris {self.name!r}: mass and drag area must be non-negative")

    def at(self, epoch: float, env: Environment, decay: bool = True) -> ClassicalElements:
        """
        Mean circular-orbit state at ``epoch``: RAAN advanced at the J2 rate and, with
        ``decay``, the semi-major axis lowered by drag since the element-set epoch.
        """
        el = self.elements
        dt = epoch - el.epoch
        a = el.a
        if decay and dt > 0.0 and self.area_coefficient > 0.0 and self.mass > 0.0:
            a = self._decayed_a(dt, env)
        raan = el.raan + j2_raan_rate(el.a, el.e, el.i, env) * dt
        return ClassicalElements(a=a, e=el.e, i=el.i, raan=raan, argp=el.argp, nu=el.nu,
                                 epoch=epoch)

    def _decayed_a(self, dt: float, env: Environment) -> float:
        def rate(_, y):
            return [circular_drag_decay_rate(y[0], self.area_coefficient, self.mass, env)]

        sol = solve_ivp(rate, (0.0, dt), [self.elements.a], method="RK45", rtol=1e-8,
                        atol=1e-6, max_step=_DECAY_STEP * 30.0)
        if not sol.success:
            raise DomainError(f"debris {self.name!r}: decay integration failed: {sol.message}")
        return float(sol.y[0, -1])


@dataclass(frozen=True)
class TourDefinition:
    """
    Attributes
    ----------
    debris : tuple of DebrisTarget
        Visiting order; the tour starts attached to the first object.
    sc : SpacecraftConfig
    env : Environment
    launch_epoch : float
        [s since J2000]
    shepherd_altitude : float
        Handover altitude [km].
    handover_dwell, proximity_dwell : float
        [s]
    objective : str
        ``fuel`` (minimise delta-v subject to ``tof_max``) or ``time`` (minimise time of
        flight subject to ``dv_max``).
    tof_max : float, optional
        [s]
    dv_max : float, optional
        [km/s]
    altitude_bounds : tuple of float
        Drift-orbit altitude box [km].
    inclination_bounds : tuple of float
        Drift-orbit inclination box [rad].
    launch_window : float
        Width [s] of the launch-epoch search window; 0 disables the extra variable.
    debris_decay : bool
        Lower debris orbits by drag while they wait; on by default.
    n_segments : int
        Extended Edelbaum segments per thrust arc.
    edelbaum : ExtendedEdelbaumOptions
    """
    debris: Tuple[DebrisTarget, ...]
    sc: SpacecraftConfig
    env: Environment = field(default_factory=Environment)
    launch_epoch: float = 0.0
    shepherd_altitude: float = 350.0
    handover_dwell: float = 30.0 * DAY
    proximity_dwell: float = 45.0 * DAY
    objective: str = "fuel"
    tof_max: Optional[float] = None
    dv_max: Optional[float] = None
    altitude_bounds: Tuple[float, float] = (300.0, 1200.0)
    inclination_bounds: Tuple[float, float] = (math.radians(95.0), math.radians(102.0))
    launch_window: float = 0.0
    debris_decay: bool = True
    n_segments: int = DEFAULT_SEGMENTS
    edelbaum: ExtendedEdelbaumOptions = field(default_factory=ExtendedEdelbaumOptions)

    def __post_init__(self):
        object.__setattr__(self, "debris", tuple(self.debris))
        if not self.debris:
            raise ConfigError("a tour needs at least one debris object")
        if self.handover_dwell < 0.0 or self.proximity_dwell < 0.0:
            raise ConfigError("dwell durations must be non-negative")
        if self.objective not in OBJECTIVES:
            raise ConfigError(f"objective must be one of {OBJECTIVES}, got {self.objective!r}")
        if self.tof_max is not None and not self.tof_max > 0.0:
            raise ConfigError("tof_max must be positive")
        if self.dv_max is not None and not self.dv_max > 0.0:
            raise ConfigError("dv_max must be positive")
        low, high = self.altitude_bounds
        if not 0.0 < low < high:
            raise ConfigError("altitude bounds must satisfy 0 < low < high")
        low, high = self.inclination_bounds
        if not 0.0 <= low < high <= math.pi:
            raise ConfigError("inclination bounds must satisfy 0 <= low < high <= pi")
        if self.launch_window < 0.0:
            raise ConfigError("launch window must be non-negative")
        if self.n_segments < 2:
            raise ConfigError("n_segments must be at least 2")

    @property
    def shepherd_radius(self) -> float:
        return self.env.re + self.shepherd_altitude

    @property
    def constraint_bound(self) -> Optional[float]:
        """TOF bound for fuel tours, delta-v bound for time tours."""
        return self.tof_max if self.objective == "fuel" else self.dv_max

    def layout(self) -> "DecisionLayout":
        return DecisionLayout.for_definition(self)


@dataclass(frozen=True)
class DecisionLayout:
    """
    Optimisation vector ``[V_d1, I_d1, V_d2, I_d2, ...]`` (km/s, rad), one pair per
    rendezvous leg, optionally followed by the launch-epoch offset [s].

    Attributes
    ----------
    n_drift : int
        Number of rendezvous legs.
    lower, upper : np.ndarray
        Box bounds in natural units.
    """
    n_drift: int
    lower: np.ndarray
    upper: np.ndarray

    @classmethod
    def for_definition(cls, definition: TourDefinition) -> "DecisionLayout":
        env = definition.env
        n_drift = len(definition.debris) - 1
        alt_low, alt_high = definition.altitude_bounds
        v_low = env.circular_speed(env.re + alt_high)
        v_high = env.circular_speed(env.re + alt_low)
        i_low, i_high = definition.inclination_bounds
        lower: List[float] = [v_low, i_low] * n_drift
        upper: List[float] = [v_high, i_high] * n_drift
        if definition.launch_window > 0.0:
            lower.append(0.0)
            upper.append(definition.launch_window)
        return cls(n_drift, np.array(lower, dtype=float), np.array(upper, dtype=float))

    @property
    def size(self) -> int:
        return int(self.lower.size)

    @property
    def has_launch_offset(self) -> bool:
        return self.size == 2 * self.n_drift + 1

    def drift_orbits(self, x: Sequence[float]) -> List[DriftOrbit]:
        x = np.asarray(x, dtype=float)
        if x.size != self.size:
            raise ConfigError(f"decision vector has {x.size} entries, expected {self.size}")
        return [DriftOrbit(float(x[2 * k]), float(x[2 * k + 1])) for k in range(self.n_drift)]

    def launch_offset(self, x: Sequence[float]) -> float:
        return float(x[-1]) if self.has_launch_offset else 0.0

    def contains(self, x: Sequence[float], tol: float = 1e-12) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower - tol) and np.all(x <= self.upper + tol))

    def to_unit(self, x: Sequence[float]) -> np.ndarray:
        return (np.asarray(x, dtype=float) - self.lower) / (self.upper - self.lower)

    def from_unit(self, u: Sequence[float]) -> np.ndarray:
        return self.lower + np.clip(np.asarray(u, dtype=float), 0.0, 1.0) * (self.upper - self.lower)

    @staticmethod
    def from_drift_orbits(drifts: Sequence[Tuple[float, float]], env: Environment,
                          launch_offset: Optional[float] = None) -> np.ndarray:
        """Vector from (radius km, inclination rad) pairs."""
        values: List[float] = []
        for a, i in drifts:
            values.extend([env.circular_speed(a), i])
        if launch_offset is not None:
            values.append(launch_offset)
        return np.array(values, dtype=float)
