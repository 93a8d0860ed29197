"""
Exception hierarchy for adr_tours.

Every error raised on purpose by the library derives from `AdrToursError`. Each class
carries the process exit code the command-line interface uses when the error escapes a
command.

Classes
-------
AdrToursError : Root of the hierarchy.
ConfigError : Mission configuration failed validation.
CatalogParseError : A two-line element set could not be decoded.
DomainError : A numerical precondition was violated.
TourInfeasibleError : The tour optimizer found no feasible design.
PropagationAbortError : A guided or open-loop propagation stopped early.
"""
from typing import Optional


class AdrToursError(Exception):
    """Base class for all errors raised by adr_tours."""

    exit_code: int = 1


class ConfigError(AdrToursError):
    """Mission configuration is malformed or out of range."""

    exit_code = 2


class CatalogParseError(AdrToursError):
    """A two-line element set failed column, range or checksum validation.

    Parameters
    ----------
    message : str
        Description of the problem.
    line_number : int, optional
        1-based line number in the parsed text.
    """

    exit_code = 2

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class DomainError(AdrToursError):
    """A numerical precondition of an astrodynamics operation was violated."""

    exit_code = 1


class DegenerateOrbitError(DomainError):
    """Orbit is rectilinear, parabolic or hyperbolic where an ellipse is required."""


class AltitudeRangeError(DomainError):
    """Altitude lies outside the tabulated atmosphere."""


class AltitudeFloorError(DomainError):
    """A transfer dropped below the minimum altitude it may reach."""


class RateEqualityError(DomainError):
    """Servicer and target precess at the same rate, so a drift cannot close the gap."""


class EdelbaumConvergenceError(DomainError):
    """The drag-restart loop of the extended Edelbaum transfer did not settle."""


class TourInfeasibleError(AdrToursError):
    """No design satisfying the tour constraint was found.

    Parameters
    ----------
    message : str
        Description of the failure.
    best_violation : float
        Smallest relative constraint violation seen during the search.
    """

    exit_code = 3

    def __init__(self, message: str, best_violation: float):
        self.best_violation = best_violation
        super().__init__(f"{message} (best relative violation {best_violation:.3e})")


class PropagationAbortError(AdrToursError):
    """Propagation stopped before the end of the reference.

    Parameters
    ----------
    message : str
        Reason of the abort.
    time : float
        Epoch of the abort [s].
    leg_index : int, optional
        Tour leg being propagated, when known.
    """

    exit_code = 4

    def __init__(self, message: str, time: float, leg_index: Optional[int] = None):
        self.time = time
        self.leg_index = leg_index
        super().__init__(message)
