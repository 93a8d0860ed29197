"""
Settings of one guided or open-loop leg propagation.

Classes
-------
PropagationConfig : Law, weights, reference segments, integrator and gating settings.
"""
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence, Tuple, Union

from ..edelbaum.profile import TransferProfile
from ..errors import ConfigError
from ..guidance.weights import LAWS, Weights
from .throttle import DeadbandThresholds

OPEN_LOOP = "open_loop"
PROPAGATION_LAWS = LAWS + (OPEN_LOOP,)
ABORT_ALTITUDE = 150.0


@dataclass(frozen=True)
class PropagationConfig:
    """
    Attributes
    ----------
    law : str
        ``ruggiero``, ``dvlaw``, ``qlaw`` or ``open_loop``.
    reference : tuple of TransferProfile
        Consecutive reference segments of the leg.
    weights : optional
        Weights of ``law``; unused for open loop.
    control_step : float
        Zero-order-hold interval of the guidance command [s].
    coast_step : float
        Integration interval [s] while the drift deadband holds the thruster off; never
        shorter than ``control_step`` and clipped at the segment end.
    rtol, atol : float
        Integrator tolerances.
    deadband : DeadbandThresholds
    abort_altitude : float
        [km]
    log_every : int
        Record one log row every ``log_every`` control steps (and always the last one).
    eclipses : bool
        Force thrust off inside the Earth's shadow.
    area_coefficient : float, optional
        Cd*A [m^2] of the flying stack; defaults to the spacecraft's own.
    carried_mass : float
        Debris mass [kg] attached during the leg; excluded from the dry-mass check.
    """
    law: str
    reference: Tuple[TransferProfile, ...]
    weights: Optional[Weights] = None
    control_step: float = 60.0
    coast_step: float = 3600.0
    rtol: float = 1e-10
    atol: float = 1e-9
    deadband: DeadbandThresholds = field(default_factory=DeadbandThresholds)
    abort_altitude: float = ABORT_ALTITUDE
    log_every: int = 10
    eclipses: bool = True
    area_coefficient: Optional[float] = None
    carried_mass: float = 0.0

    def __post_init__(self):
        if isinstance(self.reference, TransferProfile):
            object.__setattr__(self, "reference", (self.reference,))
        object.__setattr__(self, "reference", tuple(self.reference))
        if self.law not in PROPAGATION_LAWS:
            raise ConfigError(f"unknown propagation law {self.law!r}; "
                              f"expected one of {PROPAGATION_LAWS}")
        if self.law != OPEN_LOOP and self.weights is None:
            raise ConfigError(f"law {self.law!r} needs weights")
        if not self.reference:
            raise ConfigError("a propagation needs at least one reference segment")
        for before, after in zip(self.reference, self.reference[1:]):
            if after.start_epoch < before.end_epoch - 1e-6:
                raise ConfigError("reference segments overlap")
        if not self.control_step > 0.0:
            raise ConfigError("control step must be positive")
        if self.coast_step < self.control_step:
            raise ConfigError("coast step must not be shorter than the control step")
        if self.log_every < 1:
            raise ConfigError("log_every must be at least 1")

    @property
    def start_epoch(self) -> float:
        return self.reference[0].start_epoch

    @property
    def end_epoch(self) -> float:
        return self.reference[-1].end_epoch

    def segment_at(self, epoch: float) -> TransferProfile:
        """Reference segment covering ``epoch`` (the last one past the end)."""
        for segment in self.reference:
            if epoch < segment.end_epoch:
                return segment
        return self.reference[-1]

    def replace(self, **changes) -> "PropagationConfig":
        return replace(self, **changes)


def as_reference(segments: Union[TransferProfile, Sequence[TransferProfile]]
                 ) -> Tuple[TransferProfile, ...]:
    if isinstance(segments, TransferProfile):
        return (segments,)
    return tuple(segments)
