"""
Tour evaluation: assembles every leg of a tour for one decision vector.

Classes
-------
TourEvaluator : Callable that builds a TourSolution from a definition and a vector.
FitnessResult : Objective and constraint violation of one vector, or its failure.
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from ..astro.elements import ClassicalElements
from ..edelbaum.classical import EdelbaumBoundary
from ..edelbaum.extended import extended_edelbaum
from ..errors import DomainError
from ..raan_match.drift import DriftOrbit, drift_profile
from ..raan_match.transfer import raan_matching_transfer
from .definition import TourDefinition
from .solution import TourLeg, TourSolution, leg_labels

logger = logging.getLogger(__name__)


class TourEvaluator:
    """
    Builds the legs of a tour in flight order.

    The tour starts attached to the first debris object. For every object it lowers the
    stack to the shepherd orbit, waits the handover dwell there and, when more objects
    remain, climbs to the next one through the drift orbit chosen by the decision vector
    and waits the proximity dwell next to it.
    """

    def __init__(self, dwell_samples: int = 200):
        self.dwell_samples = dwell_samples

    def __call__(self, definition: TourDefinition, x: Sequence[float] = (),
                 n_segments: Optional[int] = None) -> TourSolution:
        """
        Evaluate a tour.

        Parameters
        ----------
        definition : TourDefinition
        x : sequence of float
            Decision vector (see ``DecisionLayout``).
        n_segments : int, optional
            Overrides ``definition.n_segments`` for the thrust arcs.

        Returns
        -------
        TourSolution

        Raises
        ------
        DomainError
            When ``x`` leaves its box, a leg cannot be computed or the servicer runs out
            of propellant.
        """
        layout = definition.layout()
        x = np.asarray(x, dtype=float)
        drifts = layout.drift_orbits(x)
        if not layout.contains(x):
            raise DomainError("decision vector outside its bounds")
        for drift in drifts:
            drift.validate(definition.env, definition.inclination_bounds)
        segments = definition.n_segments if n_segments is None else n_segments

        env, sc = definition.env, definition.sc
        epoch = definition.launch_epoch + layout.launch_offset(x)
        mass = sc.wet_mass
        first = definition.debris[0].at(epoch, env, definition.debris_decay)
        orbit = ClassicalElements.circular(first.a, first.i, first.raan, epoch=epoch)
        legs: List[TourLeg] = []

        for k, debris in enumerate(definition.debris):
            if k > 0:
                drift = drifts[k - 1]
                target = debris.at(epoch, env, definition.debris_decay)
                transfer = raan_matching_transfer(orbit, target, drift, sc, env, mass0=mass,
                                                  n_segments=segments,
                                                  options=definition.edelbaum)
                end = transfer.phase2
                orbit = ClassicalElements.circular(target.a, target.i, float(end.raan[-1]),
                                                   epoch=end.end_epoch)
                legs.append(self._leg("rendezvous", debris.name, transfer.segments, mass,
                                      transfer.end_mass, 0.0, orbit, drift=drift))
                mass, epoch = transfer.end_mass, end.end_epoch

                dwell = drift_profile(DriftOrbit.from_radius(orbit.a, orbit.i, env), epoch,
                                      definition.proximity_dwell, orbit.raan, sc, env,
                                      mass0=mass, n_samples=self.dwell_samples, kind="dwell")
                orbit = orbit.replace(raan=float(dwell.raan[-1]), epoch=dwell.end_epoch)
                legs.append(self._leg("proximity", debris.name, [dwell], mass,
                                      float(dwell.mass[-1]), 0.0, orbit))
                mass, epoch = float(dwell.mass[-1]), dwell.end_epoch

            stack_area = sc.ballistic_coefficient() + debris.area_coefficient
            stack_mass = mass + debris.mass
            lowering = extended_edelbaum(
                EdelbaumBoundary.from_orbits(orbit.a, definition.shepherd_radius, orbit.i,
                                             orbit.i, env, orbit.raan, epoch),
                sc, env, segments, mass0=stack_mass, area_coefficient=stack_area,
                options=definition.edelbaum)
            orbit = ClassicalElements.circular(definition.shepherd_radius, orbit.i,
                                               float(lowering.raan[-1]),
                                               epoch=lowering.end_epoch)
            end_mass = float(lowering.mass[-1]) - debris.mass
            legs.append(self._leg("deorbit", debris.name, [lowering], mass, end_mass,
                                  debris.mass, orbit, carried_area=debris.area_coefficient))
            mass, epoch = end_mass, lowering.end_epoch

            dwell = drift_profile(DriftOrbit.from_radius(orbit.a, orbit.i, env), epoch,
                                  definition.handover_dwell, orbit.raan, sc, env,
                                  mass0=mass + debris.mass, area_coefficient=stack_area,
                                  n_samples=self.dwell_samples, kind="dwell")
            orbit = orbit.replace(raan=float(dwell.raan[-1]), epoch=dwell.end_epoch)
            end_mass = float(dwell.mass[-1]) - debris.mass
            legs.append(self._leg("handover", debris.name, [dwell], mass, end_mass,
                                  debris.mass, orbit, carried_area=debris.area_coefficient))
            mass, epoch = end_mass, dwell.end_epoch

        if mass < sc.dry_mass:
            raise DomainError(f"tour needs {sc.wet_mass - mass:.2f} kg of propellant, "
                              f"only {sc.wet_mass - sc.dry_mass:.2f} kg on board")

        labels = leg_labels([leg.kind for leg in legs], [leg.debris for leg in legs],
                            definition.shepherd_altitude)
        numbered = []
        number = 0
        for leg, label in zip(legs, labels):
            if leg.is_transfer:
                number += 1
            numbered.append(TourLeg(leg.kind, label, leg.debris, leg.segments, leg.mass_start,
                                    leg.mass_end, leg.carried_mass, leg.end_elements,
                                    number if leg.is_transfer else None, leg.drift,
                                    leg.carried_area))
        solution = TourSolution(tuple(numbered), tuple(x), definition.objective,
                                definition.launch_epoch + layout.launch_offset(x),
                                definition.constraint_bound)
        logger.debug("tour x=%s: dv %.2f m/s, tof %.2f d, fuel %.2f kg", np.round(x, 6),
                     solution.dv * 1000.0, solution.tof / 86400.0, solution.fuel)
        return solution

    @staticmethod
    def _leg(kind, debris, segments, mass_start, mass_end, carried, end_elements,
             drift=None, carried_area=0.0) -> TourLeg:
        return TourLeg(kind, kind, debris, tuple(segments), mass_start, mass_end, carried,
                       end_elements, None, drift, carried_area)


@dataclass(frozen=True)
class FitnessResult:
    """
    Attributes
    ----------
    objective : float
        Delta-v [km/s] or TOF [d]; ``inf`` when the evaluation failed.
    violation : float
        Relative constraint excess; ``inf`` when the evaluation failed.
    solution : TourSolution, optional
    error : str, optional
    """
    objective: float
    violation: float
    solution: Optional[TourSolution] = None
    error: Optional[str] = None

    @property
    def feasible(self) -> bool:
        return self.solution is not None and self.violation == 0.0


def tour_fitness(definition: TourDefinition, x: Sequence[float],
                 n_segments: Optional[int] = None,
                 evaluator: Optional[TourEvaluator] = None) -> FitnessResult:
    """Objective and violation of ``x``; domain failures are reported, not raised."""
    evaluator = evaluator or evaluate_tour
    try:
        solution = evaluator(definition, x, n_segments)
    except DomainError as exc:
        return FitnessResult(math.inf, math.inf, None, str(exc))
    objective = solution.dv if definition.objective == "fuel" else solution.tof / 86400.0
    return FitnessResult(objective, solution.constraint_violation(), solution)


evaluate_tour = TourEvaluator()
