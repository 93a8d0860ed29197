"""
Guided and open-loop propagation of one tour leg in osculating dynamics.

Classes
-------
LegPropagator : Callable integrating a leg under a guidance law or the open-loop profile.
"""
import logging
import math
from typing import Optional

import numpy as np
from scipy.integrate import solve_ivp

from ..astro.eclipse import eclipse_center_arglat, in_shadow
from ..astro.elements import (CartesianState, ClassicalElements, cartesian_to_elements,
                              elements_to_cartesian, wrap_2pi, wrap_pi)
from ..astro.environment import Environment, SpacecraftConfig
from ..astro.mean_elements import mean_to_osculating, osculating_to_mean
from ..edelbaum.profile import TransferProfile
from ..errors import DegenerateOrbitError, PropagationAbortError
from ..guidance import get_law
from ..guidance.gve import TargetState
from .config import OPEN_LOOP, PropagationConfig
from .dynamics import drag_vector, equations_of_motion, thrust_force
from .log import LogBuilder, TerminalErrors, TrajectoryLog, elements_row
from .throttle import ThrottleState, drift_deadband, duty_throttle

logger = logging.getLogger(__name__)

_ZERO = np.zeros(3)


def _mean_state(y: np.ndarray, t: float, env: Environment):
    osc = cartesian_to_elements(CartesianState(y[:3], y[3:6], t), env)
    mean = osculating_to_mean(osc, env)
    # true anomaly of the actual position, measured from the mean perigee
    arg_latitude = osc.argp + osc.nu
    mean = mean.replace(nu=wrap_2pi(arg_latitude - mean.argp))
    return osc, mean, arg_latitude


class LegPropagator:
    """
    Integrates x'' = gravity + J2 + drag + thrust with the command held over each control
    step.

    At every control step the osculating state is converted to mean elements, the
    reference is sampled, the thrust direction is commanded and the duty-cycle, shadow and
    (on drift segments) deadband gates decide whether the thruster fires. While the deadband
    holds the thruster off, a step spans the coast step instead.
    """

    def __init__(self, sun: Optional[np.ndarray] = None):
        self.sun = sun

    def __call__(self, start: ClassicalElements, cfg: PropagationConfig, sc: SpacecraftConfig,
                 env: Environment, *, mass0: Optional[float] = None,
                 leg_index: Optional[int] = None) -> TrajectoryLog:
        """
        Propagate one leg.

        Parameters
        ----------
        start : ClassicalElements
            Mean elements at the start of the reference.
        cfg : PropagationConfig
        sc : SpacecraftConfig
        env : Environment
        mass0 : float, optional
            Stack mass at the start; defaults to the reference's first mass sample.
        leg_index : int, optional
            Reported in the log and in aborts.

        Returns
        -------
        TrajectoryLog

        Raises
        ------
        PropagationAbortError
            Below the abort altitude, below the dry mass or when the integrator fails.
        """
        t = cfg.start_epoch
        t_end = cfg.end_epoch
        mass = float(cfg.reference[0].mass[0]) if mass0 is None else float(mass0)
        osc0 = mean_to_osculating(start.replace(epoch=t), env)
        cart = elements_to_cartesian(osc0, env)
        y = np.concatenate((cart.position, cart.velocity, [mass, 0.0]))

        law = None if cfg.law == OPEN_LOOP else get_law(cfg.law)
        area = sc.ballistic_coefficient() if cfg.area_coefficient is None \
            else cfg.area_coefficient
        exhaust = sc.exhaust_velocity(env.g0)
        log = LogBuilder()
        deadband = ThrottleState.OFF
        segment: Optional[TransferProfile] = None
        theta_c: Optional[float] = None
        step = 0
        logger.info("propagating leg %s with %s over %.2f d", leg_index, cfg.law,
                    (t_end - t) / 86400.0)

        while t < t_end - 1e-6:
            coasting = False
            self._check_abort(y, t, cfg, sc, env, leg_index)
            osc, mean, theta = self._elements(y, t, env, leg_index)
            current = cfg.segment_at(t)
            if current is not segment:
                segment, deadband = current, ThrottleState.OFF
            sample = segment.sample(t)

            centre = eclipse_center_arglat(mean, t, env, self.sun)
            if centre is not None:
                theta_c = centre
            gate = duty_throttle(theta, theta_c, sc.duty_ratio)
            if cfg.eclipses and in_shadow(y[:3], t, env, self.sun):
                gate = 0

            scalar = math.nan
            if law is None:
                direction, thrust = self._open_loop(segment, sample, theta, gate, sc, env, area)
            else:
                target = TargetState.from_sample(sample)
                f = sc.max_thrust / y[6] / 1000.0
                if segment.kind != "thrust":
                    deadband = drift_deadband(mean, sample.a, sample.i, sample.raan, deadband,
                                              cfg.deadband)
                    if deadband is ThrottleState.OFF:
                        gate = 0
                        coasting = True
                command = law(mean, target, cfg.weights, env, f)
                value = law.value(mean, target, cfg.weights, env, f)
                scalar = math.nan if value is None else value
                if not command.active:
                    gate = 0
                direction = command.vector
                thrust = thrust_force(direction if gate else None, sc.max_thrust)

            if step % cfg.log_every == 0:
                log.append(t, elements_row(osc), elements_row(mean), y[6], y[7], gate, scalar,
                           direction)
            h = min(cfg.control_step, t_end - t)
            if coasting:
                h = max(h, min(cfg.coast_step, t_end - t, segment.end_epoch - t))
            rhs = equations_of_motion(env, area, exhaust, thrust)
            sol = solve_ivp(rhs, (t, t + h), y, method="DOP853", rtol=cfg.rtol, atol=cfg.atol)
            if not sol.success:
                raise PropagationAbortError(f"integrator failed: {sol.message}", t, leg_index)
            y = sol.y[:, -1]
            t += h
            step += 1

        self._check_abort(y, t, cfg, sc, env, leg_index)
        osc, mean, _ = self._elements(y, t, env, leg_index)
        log.append(t, elements_row(osc), elements_row(mean), y[6], y[7], 0, math.nan, _ZERO)
        end = cfg.reference[-1].end()
        errors = TerminalErrors(mean.a - end.a, math.degrees(mean.i - end.i),
                                math.degrees(float(wrap_pi(mean.raan - end.raan))))
        result = log.build(cfg.law, errors, leg_index, exhaust)
        logger.info("leg %s (%s) done: fuel %.2f kg, errors da %.3f km, di %.4f deg, "
                    "draan %.4f deg", leg_index, cfg.law, result.fuel, errors.da, errors.di,
                    errors.draan)
        return result

    @staticmethod
    def _elements(y, t, env, leg_index):
        try:
            return _mean_state(y, t, env)
        except DegenerateOrbitError as exc:
            raise PropagationAbortError(f"orbit degenerated: {exc}", t, leg_index) from exc

    @staticmethod
    def _check_abort(y, t, cfg, sc, env, leg_index) -> None:
        altitude = float(np.linalg.norm(y[:3])) - env.re
        if altitude < cfg.abort_altitude:
            logger.warning("leg %s aborted at altitude %.1f km", leg_index, altitude)
            raise PropagationAbortError(
                f"altitude {altitude:.1f} km below {cfg.abort_altitude:.0f} km", t, leg_index)
        if y[6] - cfg.carried_mass < sc.dry_mass:
            logger.warning("leg %s aborted: propellant exhausted", leg_index)
            raise PropagationAbortError(
                f"servicer mass {y[6] - cfg.carried_mass:.2f} kg below dry mass "
                f"{sc.dry_mass:.2f} kg", t, leg_index)

    @staticmethod
    def _open_loop(segment, sample, theta, gate, sc, env, area):
        if segment.kind == "thrust":
            sign = segment.plane_change_sign * (1.0 if math.cos(theta) >= 0.0 else -1.0)
            direction = np.array([0.0, math.cos(sample.beta), sign * math.sin(sample.beta)])
            return direction, thrust_force(direction if gate else None, sc.max_thrust)
        if not gate:
            return _ZERO, thrust_force(None, sc.max_thrust)
        duty = sc.duty_ratio

        def cancel_drag(y):
            return -drag_vector(y[:3], y[3:6], y[6], area, env) / duty
        return np.array([0.0, 1.0, 0.0]), cancel_drag


propagate_leg = LegPropagator()


def forward_propagate_pmdt(start: ClassicalElements, reference, sc: SpacecraftConfig,
                           env: Environment, *, mass0: Optional[float] = None,
                           leg_index: Optional[int] = None, **settings) -> TrajectoryLog:
    """Open-loop flight of the reference: Edelbaum yaw on thrust arcs, drag cancelling on coasts."""
    cfg = PropagationConfig(law=OPEN_LOOP, reference=reference, **settings)
    return propagate_leg(start, cfg, sc, env, mass0=mass0, leg_index=leg_index)

