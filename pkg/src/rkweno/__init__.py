"""High-order RK + WENO finite-difference solver for hyperbolic
conservation laws on bounded domains, with stage-consistent ghost-point
boundary fills and downwind operators for schemes carrying negative
coefficients."""

from .boundary import BoundaryDriver, BoundaryMethod
from .grid import FieldArray, Grid1D, build_grid, fill_periodic_ghosts
from .integrator import StepConfig, integrate, rk_step
from .problems import (
    ProblemDefinition,
    make_blast_wave,
    make_burgers,
    make_euler2d_vortex,
    make_euler_smooth,
    make_linear_advection,
    make_problem,
)
from .reconstruction import ReconstructionConfig
from .tableaux import RKTableau, builtin_tableau, validate_tableau

__all__ = [
    "BoundaryDriver",
    "BoundaryMethod",
    "FieldArray",
    "Grid1D",
    "build_grid",
    "fill_periodic_ghosts",
    "StepConfig",
    "integrate",
    "rk_step",
    "ProblemDefinition",
    "make_blast_wave",
    "make_burgers",
    "make_euler2d_vortex",
    "make_euler_smooth",
    "make_linear_advection",
    "make_problem",
    "ReconstructionConfig",
    "RKTableau",
    "builtin_tableau",
    "validate_tableau",
]

__version__ = "0.1.0"
