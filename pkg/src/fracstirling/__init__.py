"""Quantum Stirling cycle with a fractional-kinetics particle in a box.

The package computes canonical-ensemble thermodynamics of a single particle
confined to an infinite well whose kinetic energy scales as |p|^alpha with
1 < alpha <= 2, assembles four-corner Stirling cycles from such states, and
locates the perfect-regeneration operating manifold q_r = 0 by sweeps and
bracketed root finding.
"""

from .cycle import (
    CycleParams,
    CycleReport,
    DegenerateCycleError,
    REGIME_ENGINE,
    REGIME_NON_ENGINE,
    carnot_efficiency,
    corners,
    evaluate,
)
from .solver import (
    NodeError,
    NoRootError,
    RegenerationPoint,
    SolverError,
    SweepAxis,
    SweepGrid,
    find_brackets,
    solve_alpha1,
    solve_regeneration,
    sweep,
    trace_curve,
)
from .spectrum import WellSpec, energy_level, energy_levels, scale_coefficient
from .thermo import (
    DEFAULT_REL_TOL,
    EnsembleSummary,
    MAX_LEVELS,
    ThermalState,
    TruncationLimitError,
    entropy,
    internal_energy,
    summarize,
)

__version__ = "0.1.0"

__all__ = [
    "CycleParams",
    "CycleReport",
    "DEFAULT_REL_TOL",
    "DegenerateCycleError",
    "EnsembleSummary",
    "MAX_LEVELS",
    "NodeError",
    "NoRootError",
    "REGIME_ENGINE",
    "REGIME_NON_ENGINE",
    "RegenerationPoint",
    "SolverError",
    "SweepAxis",
    "SweepGrid",
    "ThermalState",
    "TruncationLimitError",
    "WellSpec",
    "carnot_efficiency",
    "corners",
    "energy_level",
    "energy_levels",
    "entropy",
    "evaluate",
    "find_brackets",
    "internal_energy",
    "scale_coefficient",
    "solve_alpha1",
    "solve_regeneration",
    "summarize",
    "sweep",
    "trace_curve",
    "__version__",
]
