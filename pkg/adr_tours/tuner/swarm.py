"""
Global-best particle swarm with bound clamping and pinned coordinates.

Classes
-------
SwarmSettings : Swarm size, iterations and the update coefficients.
Swarm : Callable minimising a function over a box.
"""
import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import ConfigError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SwarmSettings:
    """
    Attributes
    ----------
    size : int
        Number of particles.
    iterations : int
        Number of generations, the initial one included.
    inertia, cognitive, social : float
        Update coefficients.
    velocity_clamp : float
        Largest velocity component as a fraction of the box width.
    initial_velocity : float
        Half-width of the uniform initial velocities as a fraction of the box width.
    seed : int, optional
    """
    size: int = 50
    iterations: int = 40
    inertia: float = 0.72
    cognitive: float = 1.49
    social: float = 1.49
    velocity_clamp: float = 0.5
    initial_velocity: float = 0.1
    seed: Optional[int] = 0

    def __post_init__(self):
        if self.size < 1:
            raise ConfigError("swarm size must be at least 1")
        if self.iterations < 1:
            raise ConfigError("iterations must be at least 1")
        if not 0.0 <= self.cognitive <= 4.0 or not 0.0 <= self.social <= 4.0:
            raise ConfigError("cognitive and social coefficients must be in [0, 4]")


@dataclass
class SwarmResult:
    x: np.ndarray
    fitness: float
    history: List[float] = field(default_factory=list)
    evaluations: int = 0


class Swarm:
    """
    Minimise ``func`` over [lower, upper].

    Particle 0 starts at ``x0`` and any ``seeds`` follow it; the remaining particles are
    drawn uniformly. Pinned coordinates stay at their ``x0`` value in every particle.
    """

    def __init__(self, settings: Optional[SwarmSettings] = None):
        self.settings = settings or SwarmSettings()

    def __call__(self, func: Callable[[np.ndarray], float], lower: Sequence[float],
                 upper: Sequence[float], x0: Optional[Sequence[float]] = None,
                 seeds: Sequence[Sequence[float]] = (), pinned: Sequence[int] = ()
                 ) -> SwarmResult:
        s = self.settings
        lower = np.asarray(lower, dtype=float)
        upper = np.asarray(upper, dtype=float)
        if lower.shape != upper.shape or np.any(upper < lower):
            raise ConfigError("swarm bounds must have equal size and lower <= upper")
        n_dim = lower.size
        rng = np.random.default_rng(s.seed)
        width = upper - lower
        pinned = np.array(sorted(set(pinned)), dtype=int)

        positions = lower + rng.random((s.size, n_dim)) * width
        starts: List[np.ndarray] = []
        if x0 is not None:
            starts.append(np.asarray(x0, dtype=float))
        starts.extend(np.asarray(seed, dtype=float) for seed in seeds)
        for k, start in enumerate(starts[:s.size]):
            positions[k] = np.clip(start, lower, upper)
        anchor = positions[0].copy()
        velocities = s.initial_velocity * width * (2.0 * rng.random((s.size, n_dim)) - 1.0)
        if x0 is not None:
            velocities[0] = 0.0
        if pinned.size:
            positions[:, pinned] = anchor[pinned]
            velocities[:, pinned] = 0.0
        vmax = s.velocity_clamp * width

        fitness = np.array([func(p) for p in positions])
        evaluations = s.size
        best_positions = positions.copy()
        best_fitness = fitness.copy()
        g = int(np.argmin(best_fitness))
        g_position, g_fitness = best_positions[g].copy(), float(best_fitness[g])
        history = [g_fitness]
        logger.debug("swarm generation 1: best %.6g (particle %d)", g_fitness, g)

        for generation in range(2, s.iterations + 1):
            r1 = rng.random((s.size, n_dim))
            r2 = rng.random((s.size, n_dim))
            velocities = (s.inertia * velocities
                          + s.cognitive * r1 * (best_positions - positions)
                          + s.social * r2 * (g_position - positions))
            velocities = np.clip(velocities, -vmax, vmax)
            positions = np.clip(positions + velocities, lower, upper)
            if pinned.size:
                positions[:, pinned] = anchor[pinned]
                velocities[:, pinned] = 0.0
            fitness = np.array([func(p) for p in positions])
            evaluations += s.size
            improved = fitness < best_fitness
            best_fitness[improved] = fitness[improved]
            best_positions[improved] = positions[improved]
            g = int(np.argmin(best_fitness))
            if best_fitness[g] < g_fitness:
                g_position, g_fitness = best_positions[g].copy(), float(best_fitness[g])
            history.append(g_fitness)
            logger.debug("swarm generation %d: best %.6g", generation, g_fitness)
        return SwarmResult(g_position, g_fitness, history, evaluations)


def split_vector(x: Sequence[float], size: int = 5) -> Tuple[np.ndarray, np.ndarray]:
    """Downward and upward halves of a tuning vector."""
    x = np.asarray(x, dtype=float)
    return x[:size].copy(), x[size:2 * size].copy()
