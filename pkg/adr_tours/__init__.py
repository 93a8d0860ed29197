"""
adr_tours

Design and guidance of low-thrust multi-target active debris removal tours.

The package plans tours of circular-orbit transfers (Extended Edelbaum legs joined by
J2-driven RAAN drift orbits), optimises the drift orbits for fuel or time, and flies the
resulting reference through an osculating propagator under Ruggiero, delta-v-law or
Q-law guidance. Use cases are exposed through the ``adr_tours`` command line and an
optional Flask service.

Requirements
------------
- numpy, scipy
- PyYAML
- Flask, bisslog, bisslog-schema (mission service)
- (optional) flask-cors
"""
from .errors import (AdrToursError, CatalogParseError, ConfigError, DomainError,
                     PropagationAbortError, TourInfeasibleError)

__all__ = ["AdrToursError", "CatalogParseError", "ConfigError", "DomainError",
           "PropagationAbortError", "TourInfeasibleError"]
