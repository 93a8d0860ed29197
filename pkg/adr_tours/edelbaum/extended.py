"""
Extended Edelbaum transfer: the classical solution stepped segment by segment with the
eclipse-limited throttle, duty ratio, mass depletion, drag and J2 RAAN precession.

The transfer is discretised in delta-v. Each segment spends the same delta-v; the time it
takes is dilated by the thrust fraction w = min(DR, sunlit fraction) and the current
acceleration T/m. Drag lowers the semi-major axis through the Gauss tangential rate; the
accumulated drop is carried in the profile and, once it exceeds the restart threshold, it
is folded into the state and the remaining Edelbaum arc is re-solved from there. A drop
left over at arrival is closed with a tangential burn.

Classes
-------
ExtendedEdelbaumOptions : Switches and numerical settings of the segment loop.
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ..astro.eclipse import sunlit_fraction
from ..astro.environment import Environment, SpacecraftConfig
from ..astro.perturbations import circular_drag_decay_rate, j2_raan_rate
from ..errors import AltitudeFloorError, ConfigError, EdelbaumConvergenceError
from .classical import EdelbaumArc, EdelbaumBoundary
from .profile import TransferProfile

logger = logging.getLogger(__name__)

DEFAULT_SEGMENTS = 1000
MIN_TRANSFER_ALTITUDE = 200.0
_MIN_THRESHOLD_KM = 1e-3


@dataclass(frozen=True)
class ExtendedEdelbaumOptions:
    """
    Attributes
    ----------
    drag : bool
        Apply atmospheric drag.
    eclipses : bool
        Limit the throttle by the sunlit fraction of the orbit.
    constant_mass : bool
        Hold the thrust acceleration at its initial value.
    max_restarts : int
        Maximum number of drag restarts before giving up.
    delta_a_threshold : float, optional
        Drag-induced semi-major-axis drop [km] that triggers a restart; defaults to one
        segment's nominal change |af - a0| / N.
    min_altitude : float
        Altitude floor [km].
    """
    drag: bool = True
    eclipses: bool = True
    constant_mass: bool = False
    max_restarts: int = 500
    delta_a_threshold: Optional[float] = None
    min_altitude: float = MIN_TRANSFER_ALTITUDE

    def __post_init__(self):
        if self.max_restarts < 0:
            raise ConfigError("max_restarts must be non-negative")
        if self.delta_a_threshold is not None and not self.delta_a_threshold > 0.0:
            raise ConfigError("delta_a_threshold must be positive")


class _Rows:
    """Growing column store for profile samples."""

    def __init__(self):
        self.columns: List[List[float]] = [[] for _ in range(8)]

    def append(self, *values: float) -> None:
        for column, value in zip(self.columns, values):
            column.append(float(value))

    def build(self, plane_change_sign: int, restarts: int) -> TransferProfile:
        t, a, i, raan, dv_cum, mass, beta, w = (np.array(c) for c in self.columns)
        return TransferProfile(t, a, i, raan, dv_cum, mass, beta, w, kind="thrust",
                               plane_change_sign=plane_change_sign, restarts=restarts)


def extended_edelbaum(b: EdelbaumBoundary, sc: SpacecraftConfig, env: Environment,
                      n_segments: int = DEFAULT_SEGMENTS, *, mass0: Optional[float] = None,
                      area_coefficient: Optional[float] = None,
                      options: Optional[ExtendedEdelbaumOptions] = None) -> TransferProfile:
    """
    Compute an Extended Edelbaum transfer.

    Parameters
    ----------
    b : EdelbaumBoundary
        Departure and arrival circular orbits, departure RAAN and epoch.
    sc : SpacecraftConfig
        Thrust, Isp and duty ratio of the thrusting spacecraft.
    env : Environment
    n_segments : int, optional
        Number of equal delta-v segments of the initial arc.
    mass0 : float, optional
        Initial mass [kg] of the thrusting stack; defaults to the wet mass.
    area_coefficient : float, optional
        Cd*A [m^2] of the stack; defaults to the spacecraft's own.
    options : ExtendedEdelbaumOptions, optional

    Returns
    -------
    TransferProfile
        Final (a, i) on the target; totals in ``tof`` and ``dv_total``.

    Raises
    ------
    AltitudeFloorError
        If the orbit drops below the altitude floor.
    EdelbaumConvergenceError
        If more than ``max_restarts`` drag restarts are needed.
    AltitudeRangeError
        If drag is evaluated outside the atmosphere table.
    """
    opts = options or ExtendedEdelbaumOptions()
    if n_segments < 1:
        raise ConfigError("n_segments must be at least 1")
    mass = sc.wet_mass if mass0 is None else float(mass0)
    initial_mass = mass
    cd_a = sc.ballistic_coefficient() if area_coefficient is None else area_coefficient
    exhaust_velocity = sc.exhaust_velocity(env.g0)
    a_target = env.circular_radius(b.vf)
    i_target = b.i0 + b.di
    a = env.circular_radius(b.v0)
    i, raan, t, dv_cum = b.i0, b.raan0, b.epoch0, 0.0

    arc = EdelbaumArc.solve(b)
    rows = _Rows()
    w = _throttle(a, i, raan, t, sc, env, opts)
    rows.append(t, a, i, raan, dv_cum, mass, arc.beta0, w)
    if arc.dv == 0.0:
        return rows.build(0, 0)

    threshold = opts.delta_a_threshold or max(abs(a_target - a) / n_segments, _MIN_THRESHOLD_KM)
    ds_nominal = arc.dv / n_segments
    n_arc, ds, k_arc = n_segments, arc.dv / n_segments, 0
    drag_da = 0.0
    restarts = 0

    while k_arc < n_arc:
        f = sc.max_thrust / (initial_mass if opts.constant_mass else mass) / 1000.0
        w = _throttle(a, i, raan, t, sc, env, opts)
        s_next = arc.dv if k_arc + 1 == n_arc else (k_arc + 1) * ds
        a_arc = float(arc.semi_major_axis(s_next, env.mu))
        i_next = float(arc.inclination(s_next))
        dt = ds / (f * w)
        mass_next = mass * math.exp(-ds / exhaust_velocity)
        if opts.drag:
            rate = 0.5 * (circular_drag_decay_rate(a, cd_a, mass, env)
                          + circular_drag_decay_rate(a_arc + drag_da, cd_a, mass_next, env))
            drag_da += rate * dt
        a_next = a_arc + drag_da
        raan += 0.5 * (j2_raan_rate(a, 0.0, i, env) + j2_raan_rate(a_next, 0.0, i_next, env)) * dt
        t += dt
        dv_cum += ds
        a, i, mass = a_next, i_next, mass_next
        k_arc += 1
        _check_floor(a, env, opts)
        rows.append(t, a, i, raan, dv_cum, mass, float(arc.yaw(s_next)), w)

        if abs(drag_da) > threshold and k_arc < n_arc:
            restarts += 1
            if restarts > opts.max_restarts:
                raise EdelbaumConvergenceError(
                    f"drag restart loop exceeded {opts.max_restarts} restarts")
            logger.debug("Drag restart %d at t=%.0f s: folding %.4f km into the state",
                         restarts, t, drag_da)
            drag_da = 0.0
            arc = EdelbaumArc.solve(EdelbaumBoundary(
                env.circular_speed(a), b.vf, i_target - i, i, raan, t))
            n_arc = max(1, int(math.ceil(arc.dv / ds_nominal)))
            ds, k_arc = arc.dv / n_arc, 0

    if drag_da != 0.0:
        v = env.circular_speed(a)
        dv_residual = abs(drag_da) * v / (2.0 * a)
        f = sc.max_thrust / (initial_mass if opts.constant_mass else mass) / 1000.0
        w = _throttle(a, i, raan, t, sc, env, opts)
        dt = dv_residual / (f * w)
        raan += j2_raan_rate(a, 0.0, i, env) * dt
        t += dt
        dv_cum += dv_residual
        mass *= math.exp(-dv_residual / exhaust_velocity)
        rows.append(t, a_target, i, raan, dv_cum, mass, 0.0, w)

    profile = rows.build(b.plane_change_sign, restarts)
    logger.debug("Extended Edelbaum %.1f -> %.1f km: dv=%.2f m/s tof=%.2f d restarts=%d",
                 env.circular_radius(b.v0) - env.re, a_target - env.re,
                 profile.dv_total * 1000.0, profile.tof / 86400.0, restarts)
    return profile


def _throttle(a: float, i: float, raan: float, t: float, sc: SpacecraftConfig,
              env: Environment, opts: ExtendedEdelbaumOptions) -> float:
    if not opts.eclipses:
        return sc.duty_ratio
    return min(sc.duty_ratio, sunlit_fraction(a, i, raan, t, env))


def _check_floor(a: float, env: Environment, opts: ExtendedEdelbaumOptions) -> None:
    if a - env.re < opts.min_altitude:
        raise AltitudeFloorError(
            f"transfer dropped to {a - env.re:.1f} km, below the {opts.min_altitude:.0f} km floor")
