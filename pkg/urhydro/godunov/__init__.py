"""
Godunov Module
==============
First-order finite-volume scheme with exact Riemann fluxes, and
convergence studies against the exact solution.
"""

from .scheme import (
    SchemeConfig,
    Grid1D,
    BoundaryLedger,
    EvolutionSummary,
    GodunovSolver,
    interface_flux,
    interface_fluxes,
    step,
    evolve,
    warn_if_boundary_reached
)

from .convergence import (
    ConvergenceRow,
    exact_cell_averages,
    l1_errors,
    run_problem,
    run_convergence,
    ratio_violations
)

__all__ = [
    'SchemeConfig',
    'Grid1D',
    'BoundaryLedger',
    'EvolutionSummary',
    'GodunovSolver',
    'interface_flux',
    'interface_fluxes',
    'step',
    'evolve',
    'warn_if_boundary_reached',
    'ConvergenceRow',
    'exact_cell_averages',
    'l1_errors',
    'run_problem',
    'run_convergence',
    'ratio_violations'
]
