"""
First-Order Godunov Scheme
==========================
Finite-volume update of the reduced 1D system

    U_i <- U_i - (dt / h) (F_{i+1/2} - F_{i-1/2})

with F_{i+1/2} the physical flux of the exact Riemann solution between
cells i and i+1 sampled at xi = 0.

Key Features:
- Global time step dt = cfl * h / max |xi_+-| over all cells
- Outflow (zero-gradient) boundaries via ghost copies of the edge cells
- Interfaces between identical states skip the Riemann solve
- Optional process pool for the interface fluxes (bit-identical to serial)
- Boundary-flux ledger for the discrete conservation check
"""

import logging
import math
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from urhydro.errors import DomainError, PositivityFailureError, SolverFailureError
from urhydro.physics.eos import EosParams
from urhydro.physics.state import (
    Flux,
    PrimState,
    cons_array_to_prim,
    flux_x,
    max_signal_speed,
    physical_mask,
    prim_array_to_cons,
)
from urhydro.riemann.solver import RiemannSolution, sample, solve
from urhydro.settings import DEFAULT_BOUNDARY, DEFAULT_CFL, VELOCITY_GUARD

logger = logging.getLogger(__name__)

SUPPORTED_BOUNDARIES = ('outflow',)


# =====================================================================
# CONFIGURATION AND GRID
# =====================================================================

@dataclass
class SchemeConfig:
    """Parameters of a Godunov run."""
    cfl: float = DEFAULT_CFL
    t_end: float = 0.4
    boundary: str = DEFAULT_BOUNDARY
    workers: int = 1                 # >1 evaluates interface fluxes in a process pool
    max_steps: int = 1_000_000

    def __post_init__(self):
        if not 0.0 < self.cfl <= 1.0:
            raise DomainError(f"cfl must lie in (0, 1], got {self.cfl!r}")
        if not self.t_end > 0.0:
            raise DomainError(f"t_end must be positive, got {self.t_end!r}")
        if self.boundary not in SUPPORTED_BOUNDARIES:
            raise DomainError(f"unsupported boundary {self.boundary!r}; expected one of {SUPPORTED_BOUNDARIES}")
        if self.workers < 1:
            raise DomainError(f"workers must be >= 1, got {self.workers!r}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'cfl': self.cfl,
            't_end': self.t_end,
            'boundary': self.boundary,
            'workers': self.workers,
            'max_steps': self.max_steps
        }


@dataclass
class Grid1D:
    """Uniform grid of conserved cell averages, columns (E, Sx, Sy, Sz)."""
    x_min: float
    x_max: float
    cells: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        self.cells = np.asarray(self.cells, dtype=float)
        if self.cells.ndim != 2 or self.cells.shape[1] != 4:
            raise DomainError(f"cells must have shape (n, 4), got {self.cells.shape}")
        if self.cells.shape[0] < 2:
            raise DomainError(f"need at least 2 cells, got {self.cells.shape[0]}")
        if not self.x_max > self.x_min:
            raise DomainError(f"empty domain [{self.x_min!r}, {self.x_max!r}]")

    @classmethod
    def from_riemann_problem(cls, left: PrimState, right: PrimState, eos: EosParams,
                             n_cells: int, x_min: float = -1.0, x_max: float = 1.0,
                             x_interface: float = 0.0) -> 'Grid1D':
        """Cells whose centre lies left of x_interface get `left`, the others `right`."""
        if n_cells < 2:
            raise DomainError(f"need at least 2 cells, got {n_cells}")
        h = (x_max - x_min) / n_cells
        centers = x_min + (np.arange(n_cells) + 0.5) * h
        prims = np.where((centers < x_interface)[:, None],
                         np.array(left.as_tuple())[None, :],
                         np.array(right.as_tuple())[None, :])
        return cls(x_min, x_max, prim_array_to_cons(prims, eos))

    @property
    def n_cells(self) -> int:
        return self.cells.shape[0]

    @property
    def h(self) -> float:
        return (self.x_max - self.x_min) / self.n_cells

    @property
    def cell_centers(self) -> np.ndarray:
        return self.x_min + (np.arange(self.n_cells) + 0.5) * self.h

    def primitives(self, eos: EosParams) -> np.ndarray:
        """(rho, vx, vy, vz) per cell."""
        return cons_array_to_prim(self.cells, eos)

    def conserved_totals(self) -> np.ndarray:
        """h * sum of each conserved column, compensated."""
        return np.array([math.fsum(self.cells[:, k]) * self.h for k in range(4)])

    def copy(self) -> 'Grid1D':
        return Grid1D(self.x_min, self.x_max, self.cells.copy(), self.time)


@dataclass
class BoundaryLedger:
    """Time-integrated fluxes through the two domain ends."""
    left: List[np.ndarray] = field(default_factory=list)
    right: List[np.ndarray] = field(default_factory=list)

    def record(self, dt: float, flux_left: np.ndarray, flux_right: np.ndarray) -> None:
        self.left.append(dt * flux_left)
        self.right.append(dt * flux_right)

    def net_inflow(self) -> np.ndarray:
        """Integral of F(x_min) - F(x_max) over time, per conserved component."""
        if not self.left:
            return np.zeros(4)
        left = np.array(self.left)
        right = np.array(self.right)
        return np.array([math.fsum(left[:, k]) - math.fsum(right[:, k]) for k in range(4)])


@dataclass
class EvolutionSummary:
    """Outcome of an evolve() run."""
    grid: Grid1D
    steps: int
    initial_totals: np.ndarray
    ledger: BoundaryLedger
    riemann_solves: int = 0

    def conservation_defect(self) -> np.ndarray:
        """
        Relative mismatch of each conserved total against its initial value
        plus the boundary inflow, scaled by the column's absolute mass.
        """
        final = self.grid.conserved_totals()
        expected = self.initial_totals + self.ledger.net_inflow()
        scale = np.array([
            max(math.fsum(np.abs(self.grid.cells[:, k])) * self.grid.h, abs(expected[k]), 1e-300)
            for k in range(4)
        ])
        return np.abs(final - expected) / scale

    def to_dict(self) -> Dict[str, Any]:
        return {
            'time': self.grid.time,
            'steps': self.steps,
            'n_cells': self.grid.n_cells,
            'riemann_solves': self.riemann_solves,
            'conservation_defect': self.conservation_defect().tolist()
        }


# =====================================================================
# FLUXES
# =====================================================================

def interface_flux(left: PrimState, right: PrimState, eos: EosParams) -> Flux:
    """Godunov flux: flux of the exact solution at xi = 0."""
    if left == right:
        return flux_x(left, eos)
    return flux_x(sample(solve(left, right, eos), 0.0), eos)


def _flux_row(args: Tuple[Tuple[float, ...], Tuple[float, ...], EosParams]) -> Tuple[float, float, float, float]:
    """Pool worker: rows are (rho, vx, vy, vz)."""
    row_left, row_right, eos = args
    left = PrimState.from_components(*row_left)
    if row_left == row_right:
        flux = flux_x(left, eos)
    else:
        flux = interface_flux(left, PrimState.from_components(*row_right), eos)
    return (flux.fE, flux.fSx, flux.fSy, flux.fSz)


def interface_fluxes(prims: np.ndarray, eos: EosParams,
                     executor: Optional[Executor] = None) -> Tuple[np.ndarray, int]:
    """
    Fluxes at all n + 1 interfaces with outflow ghost cells.

    Returns the (n + 1, 4) flux array and the number of Riemann solves.
    """
    rows = [tuple(float(v) for v in row) for row in prims]
    padded = [rows[0]] + rows + [rows[-1]]
    tasks = [(padded[i], padded[i + 1], eos) for i in range(len(padded) - 1)]
    solves = sum(1 for a, b, _ in tasks if a != b)

    if executor is None:
        fluxes = [_flux_row(task) for task in tasks]
    else:
        chunk = max(1, len(tasks) // 64)
        fluxes = list(executor.map(_flux_row, tasks, chunksize=chunk))
    return np.array(fluxes, dtype=float), solves


# =====================================================================
# TIME STEPPING
# =====================================================================

class GodunovSolver:
    """
    Drives the conservative update.

    Process per step:
    1. Convert cells to primitives (positivity check)
    2. Choose dt from the global signal speed, clipped to t_end
    3. Evaluate interface fluxes (serial or pooled)
    4. Update cells and record boundary fluxes
    """

    def __init__(self, config: SchemeConfig, eos: EosParams):
        self.config = config
        self.eos = eos

    def primitives(self, cells: np.ndarray) -> np.ndarray:
        """Primitive rows, or PositivityFailureError naming the first bad cell."""
        mask = physical_mask(cells, self.eos)
        if not mask.all():
            bad = int(np.flatnonzero(~mask)[0])
            raise PositivityFailureError(bad, cells[bad], "E <= 0 or |S| >= E")
        prims = cons_array_to_prim(cells, self.eos)
        v2 = prims[:, 1] ** 2 + prims[:, 2] ** 2 + prims[:, 3] ** 2
        bad_rows = np.flatnonzero(~((prims[:, 0] > 0.0) & (v2 < 1.0 - VELOCITY_GUARD)))
        if bad_rows.size:
            bad = int(bad_rows[0])
            raise PositivityFailureError(bad, cells[bad], f"primitive row {prims[bad].tolist()}")
        return prims

    def time_step(self, grid: Grid1D, prims: np.ndarray) -> float:
        speed = max_signal_speed(prims, self.eos)
        dt = self.config.cfl * grid.h / speed
        return min(dt, self.config.t_end - grid.time)

    def step(self, grid: Grid1D, ledger: Optional[BoundaryLedger] = None,
             executor: Optional[Executor] = None) -> Tuple[Grid1D, int]:
        """One update; returns the new grid and the number of Riemann solves."""
        prims = self.primitives(grid.cells)
        dt = self.time_step(grid, prims)
        fluxes, solves = interface_fluxes(prims, self.eos, executor)

        cells = grid.cells - (dt / grid.h) * (fluxes[1:] - fluxes[:-1])
        self.primitives(cells)
        if ledger is not None:
            ledger.record(dt, fluxes[0], fluxes[-1])
        return Grid1D(grid.x_min, grid.x_max, cells, grid.time + dt), solves

    def evolve(self, grid: Grid1D) -> EvolutionSummary:
        """Repeat step() until t_end."""
        logger.info(f"Godunov run: n={grid.n_cells}, config={self.config.to_dict()}")
        summary = EvolutionSummary(grid, 0, grid.conserved_totals(), BoundaryLedger())

        executor = ProcessPoolExecutor(max_workers=self.config.workers) if self.config.workers > 1 else None
        try:
            current = grid
            while current.time < self.config.t_end:
                if summary.steps >= self.config.max_steps:
                    raise SolverFailureError(
                        f"max_steps={self.config.max_steps} reached at t={current.time!r}"
                    )
                current, solves = self.step(current, summary.ledger, executor)
                summary.steps += 1
                summary.riemann_solves += solves
                if summary.steps % 100 == 0:
                    logger.debug(f"  step {summary.steps}: t={current.time:.6g}")
        finally:
            if executor is not None:
                executor.shutdown()

        summary.grid = current
        logger.info(
            f"Godunov run complete: t={current.time:.6g}, steps={summary.steps}, "
            f"riemann solves={summary.riemann_solves}"
        )
        return summary


def step(grid: Grid1D, cfg: SchemeConfig, eos: EosParams) -> Grid1D:
    """Single Godunov step."""
    return GodunovSolver(cfg, eos).step(grid)[0]


def evolve(grid: Grid1D, cfg: SchemeConfig, eos: EosParams) -> EvolutionSummary:
    return GodunovSolver(cfg, eos).evolve(grid)


def warn_if_boundary_reached(solution: RiemannSolution, grid: Grid1D, t_end: float,
                             x_interface: float = 0.0) -> bool:
    """Log a warning when the outermost waves reach the domain ends before t_end."""
    speeds = solution.wave_speeds()
    reach_left = x_interface + speeds[0] * t_end
    reach_right = x_interface + speeds[-1] * t_end
    if reach_left < grid.x_min or reach_right > grid.x_max:
        logger.warning(
            f"fastest waves reach [{reach_left:.6g}, {reach_right:.6g}] by t={t_end:g}, "
            f"outside the domain [{grid.x_min:g}, {grid.x_max:g}]"
        )
        return True
    return False
