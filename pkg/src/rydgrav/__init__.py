"""Gravitational-wave absorption and emission by hydrogenic Rydberg atoms."""

__version__ = "0.1.0"

from .constants import CODATA, NormalizationSet, PhysicalConstants
from .hydrogenic import QuantumState, RadialIntegralResult, RadialMethod, mean_r2, radial_integral, schwarz_bound
from .angular import reduced_c2, selection_rules
from .lifetimes import combined_lifetime, lifetime_bound
from .gw import TransitionFactor, WaveField, near_circular_pair, transition_factor
from .detector import GwSource, feasibility_report, load_catalog, match_principal_n

__all__ = [
    "CODATA",
    "GwSource",
    "NormalizationSet",
    "PhysicalConstants",
    "QuantumState",
    "RadialIntegralResult",
    "RadialMethod",
    "TransitionFactor",
    "WaveField",
    "combined_lifetime",
    "feasibility_report",
    "lifetime_bound",
    "load_catalog",
    "match_principal_n",
    "mean_r2",
    "near_circular_pair",
    "radial_integral",
    "reduced_c2",
    "schwarz_bound",
    "selection_rules",
    "transition_factor",
]
