"""
Convergence against the exact solution
Evolves a Riemann problem at several resolutions and measures the L1
distance between the Godunov cell averages and exact cell averages.

Exact cell averages are built from a fixed number of midpoint sub-samples
per cell, averaged in conserved variables, so the reference does not depend
on how discontinuities align with the grid.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from urhydro.errors import DomainError
from urhydro.physics.eos import EosParams
from urhydro.physics.state import PrimState, cons_array_to_prim, prim_array_to_cons
from urhydro.riemann.solver import RiemannSolution, snapshot, solve
from urhydro.settings import CONVERGENCE_RATIO_MAX, CONVERGENCE_RATIO_MIN, EXACT_SUBSAMPLES
from urhydro.godunov.scheme import (
    EvolutionSummary,
    Grid1D,
    GodunovSolver,
    SchemeConfig,
    warn_if_boundary_reached,
)

logger = logging.getLogger(__name__)


@dataclass
class ConvergenceRow:
    n: int
    l1_rho: float
    l1_vx: float
    l1_vt: float
    ratio: Optional[float] = None    # previous l1_rho / this l1_rho

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'L1_rho': self.l1_rho,
            'L1_vx': self.l1_vx,
            'L1_vt': self.l1_vt,
            'ratio': self.ratio
        }


def exact_cell_averages(solution: RiemannSolution, grid: Grid1D, t: float,
                        subsamples: int = EXACT_SUBSAMPLES,
                        x_interface: float = 0.0) -> np.ndarray:
    """Primitive rows (rho, vx, vy, vz) of the exact cell averages at time t."""
    if subsamples < 1:
        raise DomainError(f"subsamples must be >= 1, got {subsamples}")
    h = grid.h
    offsets = (np.arange(subsamples) + 0.5) / subsamples * h - 0.5 * h
    xs = (grid.cell_centers[:, None] + offsets[None, :]).ravel() - x_interface
    states = snapshot(solution, t, xs.tolist())
    prims = np.array([s.as_tuple() for s in states], dtype=float)
    cons = prim_array_to_cons(prims, solution.eos).reshape(grid.n_cells, subsamples, 4)
    return cons_array_to_prim(cons.mean(axis=1), solution.eos)


def l1_errors(numeric: np.ndarray, exact: np.ndarray, h: float) -> Tuple[float, float, float]:
    """h * sum |difference| for rho, vx and vt."""
    vt_numeric = np.hypot(numeric[:, 2], numeric[:, 3])
    vt_exact = np.hypot(exact[:, 2], exact[:, 3])
    return (
        math.fsum(np.abs(numeric[:, 0] - exact[:, 0])) * h,
        math.fsum(np.abs(numeric[:, 1] - exact[:, 1])) * h,
        math.fsum(np.abs(vt_numeric - vt_exact)) * h,
    )


def run_problem(left: PrimState, right: PrimState, eos: EosParams, n_cells: int,
                config: SchemeConfig, x_min: float = -1.0, x_max: float = 1.0,
                solution: Optional[RiemannSolution] = None) -> Tuple[EvolutionSummary, np.ndarray]:
    """Evolve one resolution; returns the run summary and the exact cell averages."""
    solution = solution or solve(left, right, eos)
    grid = Grid1D.from_riemann_problem(left, right, eos, n_cells, x_min, x_max)
    warn_if_boundary_reached(solution, grid, config.t_end)
    summary = GodunovSolver(config, eos).evolve(grid)
    exact = exact_cell_averages(solution, summary.grid, summary.grid.time)
    return summary, exact


def run_convergence(left: PrimState, right: PrimState, eos: EosParams,
                    resolutions: Sequence[int], t_end: float, cfl: float = 0.5,
                    x_min: float = -1.0, x_max: float = 1.0, workers: int = 1) -> List[ConvergenceRow]:
    """
    L1 errors of the Godunov solution against the exact one at each resolution.

    Args:
        resolutions: cell counts, strictly ascending
        t_end: final time of every run

    Returns:
        One ConvergenceRow per resolution; ratio is None on the first row
    """
    resolutions = [int(n) for n in resolutions]
    if not resolutions:
        raise DomainError("at least one resolution is required")
    if any(b <= a for a, b in zip(resolutions, resolutions[1:])):
        raise DomainError(f"resolutions must be strictly ascending, got {resolutions}")

    config = SchemeConfig(cfl=cfl, t_end=t_end, workers=workers)
    solution = solve(left, right, eos)
    logger.info(f"Convergence study: pattern {solution.pattern}, resolutions {resolutions}")

    rows: List[ConvergenceRow] = []
    for n in resolutions:
        summary, exact = run_problem(left, right, eos, n, config, x_min, x_max, solution)
        l1_rho, l1_vx, l1_vt = l1_errors(summary.grid.primitives(eos), exact, summary.grid.h)
        ratio = None
        if rows and l1_rho > 0.0:
            ratio = rows[-1].l1_rho / l1_rho
        rows.append(ConvergenceRow(n, l1_rho, l1_vx, l1_vt, ratio))
        logger.info(f"  n={n}: L1(rho)={l1_rho:.6e} ratio={ratio}")

    for problem in ratio_violations(rows):
        logger.warning(problem)
    return rows


def ratio_violations(rows: Sequence[ConvergenceRow], low: float = CONVERGENCE_RATIO_MIN,
                     high: float = CONVERGENCE_RATIO_MAX) -> List[str]:
    """Messages for every refinement whose L1(rho) ratio lies outside [low, high]; exact rows are skipped."""
    problems = []
    for prev, row in zip(rows, rows[1:]):
        if row.ratio is not None and not low <= row.ratio <= high:
            problems.append(
                f"L1(rho) ratio {row.ratio:.4f} from n={prev.n} to n={row.n} outside [{low}, {high}]"
            )
    return problems
