"""
Mode runners
Each runner turns a validated ProblemConfig into named tables plus a JSON
summary; scripts/run_riemann.py decides where they are written.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Union

import pandas as pd

from urhydro.cli.problem_config import Mode, ProblemConfig
from urhydro.cli.tables import (
    convergence_frame,
    curve_frame,
    godunov_frame,
    overlay_diff_frame,
    read_profile,
    snapshot_frame,
)
from urhydro.errors import ConfigError
from urhydro.godunov.convergence import run_convergence as converge
from urhydro.godunov.convergence import run_problem
from urhydro.godunov.scheme import SchemeConfig
from urhydro.riemann.solver import snapshot, solve
from urhydro.riemann.wave_curve import WaveCurveFn

logger = logging.getLogger(__name__)


@dataclass
class RunOutput:
    """Named result tables and the JSON summary of one run."""
    tables: Dict[str, pd.DataFrame] = field(default_factory=dict)
    summary: Dict[str, Any] = field(default_factory=dict)


def run_exact_snapshot(cfg: ProblemConfig) -> RunOutput:
    """x, xi, rho, p, vx, vt, W of the exact solution at time cfg.t."""
    eos = cfg.eos
    solution = solve(cfg.left_state(), cfg.right_state(), eos)
    xs = cfg.grid.points()
    states = snapshot(solution, cfg.t, xs)
    logger.info(f"Exact snapshot: pattern {solution.pattern}, {len(xs)} points at t={cfg.t:g}")
    return RunOutput({'snapshot': snapshot_frame(xs, cfg.t, states, eos)}, solution.summary())


def run_wave_curves(cfg: ProblemConfig) -> RunOutput:
    """vx, rho, branch per configured curve and family."""
    eos = cfg.eos
    output = RunOutput()
    for curve_cfg in cfg.wave_curves():
        ahead = curve_cfg.ahead.to_prim()
        for family in curve_cfg.families:
            rows = WaveCurveFn(ahead, family, eos).sample_curve(curve_cfg.vx_grid())
            output.tables[f"{curve_cfg.name}_{family.value}"] = curve_frame(rows)

    if not cfg.curves:
        solution = solve(cfg.left_state(), cfg.right_state(), eos)
        output.summary = {
            'intersection': {'vx': solution.star_vx, 'rho': solution.star_rho},
            'pattern': solution.pattern,
        }
    output.summary['curves'] = list(output.tables)
    logger.info(f"Wave curves: {len(output.tables)} tables")
    return output


def run_godunov(cfg: ProblemConfig) -> RunOutput:
    """Final-time cell primitives next to exact cell averages and their difference."""
    eos = cfg.eos
    scheme = SchemeConfig(cfl=cfg.scheme.cfl, t_end=cfg.scheme.t_end, workers=cfg.scheme.workers)
    left, right = cfg.left_state(), cfg.right_state()
    solution = solve(left, right, eos)
    summary, exact = run_problem(left, right, eos, cfg.scheme.n_cells, scheme,
                                 cfg.grid.x_min, cfg.grid.x_max, solution)
    grid = summary.grid
    table = godunov_frame(grid.cell_centers, grid.primitives(eos), exact)
    return RunOutput({'godunov': table}, {'pattern': solution.pattern, **summary.to_dict()})


def run_convergence(cfg: ProblemConfig) -> RunOutput:
    """n, L1_rho, L1_vx, L1_vt, ratio over cfg.scheme.resolutions."""
    rows = converge(
        cfg.left_state(), cfg.right_state(), cfg.eos,
        cfg.scheme.resolutions, cfg.scheme.t_end, cfl=cfg.scheme.cfl,
        x_min=cfg.grid.x_min, x_max=cfg.grid.x_max, workers=cfg.scheme.workers
    )
    return RunOutput({'convergence': convergence_frame(rows)}, {'rows': [r.to_dict() for r in rows]})


def run_overlay_diff(cfg: ProblemConfig, overlay_csv: Union[str, Path]) -> RunOutput:
    """Difference between an external profile and the exact snapshot of cfg."""
    exact = run_exact_snapshot(cfg)
    overlay = read_profile(overlay_csv)
    diff = overlay_diff_frame(exact.tables['snapshot'], overlay)
    worst = {col: float(diff[col].abs().max()) for col in diff.columns if col != 'x'}
    return RunOutput({'overlay_diff': diff}, {**exact.summary, 'max_abs_diff': worst})


RUNNERS: Dict[Mode, Callable[[ProblemConfig], RunOutput]] = {
    Mode.EXACT_SNAPSHOT: run_exact_snapshot,
    Mode.WAVE_CURVES: run_wave_curves,
    Mode.GODUNOV: run_godunov,
    Mode.CONVERGENCE: run_convergence,
}


def run(cfg: ProblemConfig, overlay_csv: Optional[Union[str, Path]] = None) -> RunOutput:
    if overlay_csv is not None:
        if cfg.mode is not Mode.EXACT_SNAPSHOT:
            raise ConfigError(f"--overlay needs mode exact-snapshot, got {cfg.mode.value}")
        return run_overlay_diff(cfg, overlay_csv)
    return RUNNERS[cfg.mode](cfg)
