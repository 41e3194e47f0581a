#!/usr/bin/env python3
"""
Performance Benchmark Runner
============================
Times the randomized exact-solver residual suite, a Godunov run on the
shock-tube problem and the convergence study, and reports them against their
runtime budgets. The convergence study also fails on L1(rho) refinement
ratios outside the configured window.

Usage:
    python scripts/run_benchmarks.py                      # All benchmarks
    python scripts/run_benchmarks.py --problems 200       # Smaller residual suite
    python scripts/run_benchmarks.py --n-cells 400        # Smaller Godunov grid
    python scripts/run_benchmarks.py --workers 4          # Pooled interface fluxes
    python scripts/run_benchmarks.py --skip-convergence   # Without the 100..800 cell study
"""

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

import numpy as np

# Add parent to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from urhydro.cli import load_problem_config
from urhydro.errors import UrHydroError, VacuumLimitError
from urhydro.godunov import Grid1D, GodunovSolver, SchemeConfig, ratio_violations, run_convergence
from urhydro.logging_config import get_logger, setup_logging
from urhydro.physics import EosParams, PrimState
from urhydro.riemann import WaveKind, solve
from urhydro.waves import rh_residuals

logger = get_logger(__name__)

CS2_VALUES = (0.1, 1.0 / 3.0, 0.9)
CONFIG_DIR = Path(__file__).parent.parent / 'config'


@dataclass
class BenchmarkResult:
    """Result of a single benchmark."""
    name: str
    items: int
    elapsed_s: float
    budget_s: float
    detail: str = ""
    error: Optional[str] = None

    @property
    def status(self) -> str:
        if self.error:
            return "ERROR"
        return "OK" if self.elapsed_s <= self.budget_s else "SLOW!"


def random_state(rng: np.random.Generator) -> PrimState:
    """rho log-uniform in [1e-3, 1e3], vx^2 + vt^2 < 0.98."""
    rho = 10.0 ** rng.uniform(-3.0, 3.0)
    speed = np.sqrt(0.98) * np.sqrt(rng.uniform(0.0, 1.0))
    angle = rng.uniform(0.0, np.pi)
    return PrimState(rho, speed * np.cos(angle), speed * np.sin(angle))


def bench_residual_suite(problems: int, seed: int) -> BenchmarkResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    vacuum = 0
    start = time.perf_counter()
    try:
        for _ in range(problems):
            eos = EosParams(CS2_VALUES[int(rng.integers(len(CS2_VALUES)))])
            left, right = random_state(rng), random_state(rng)
            try:
                sol = solve(left, right, eos)
            except VacuumLimitError:
                vacuum += 1
                continue
            for wave, ahead, star in ((sol.left_wave, left, sol.left_star),
                                      (sol.right_wave, right, sol.right_star)):
                if wave.kind is WaveKind.SHOCK:
                    worst = max(worst, float(np.max(np.abs(rh_residuals(ahead, star, wave.speed, eos)))))
    except UrHydroError as e:
        return BenchmarkResult('residual_suite', problems, time.perf_counter() - start, 30.0, error=str(e))
    elapsed = time.perf_counter() - start
    return BenchmarkResult('residual_suite', problems, elapsed, 30.0,
                           f"max RH residual {worst:.2e}, vacuum excluded {vacuum}")


def bench_godunov(n_cells: int, workers: int) -> BenchmarkResult:
    eos = EosParams.from_string("1/3")
    left = PrimState(1.0, 0.5, 1.0 / 3.0)
    right = PrimState(20.0, 0.5, 0.5)
    grid = Grid1D.from_riemann_problem(left, right, eos, n_cells)
    solver = GodunovSolver(SchemeConfig(cfl=0.5, t_end=0.4, workers=workers), eos)
    start = time.perf_counter()
    try:
        summary = solver.evolve(grid)
    except UrHydroError as e:
        return BenchmarkResult(f'godunov_n{n_cells}', n_cells, time.perf_counter() - start, 60.0, error=str(e))
    elapsed = time.perf_counter() - start
    defect = float(np.max(summary.conservation_defect()))
    return BenchmarkResult(f'godunov_n{n_cells}', n_cells, elapsed, 60.0,
                           f"{summary.steps} steps, conservation defect {defect:.2e}")


def bench_convergence(config_path: Path, workers: int) -> BenchmarkResult:
    cfg = load_problem_config(config_path)
    resolutions = cfg.scheme.resolutions
    start = time.perf_counter()
    try:
        rows = run_convergence(
            cfg.left_state(), cfg.right_state(), cfg.eos, resolutions,
            t_end=cfg.scheme.t_end, cfl=cfg.scheme.cfl,
            x_min=cfg.grid.x_min, x_max=cfg.grid.x_max, workers=workers,
        )
    except UrHydroError as e:
        return BenchmarkResult('convergence', resolutions[-1], time.perf_counter() - start, 120.0, error=str(e))
    elapsed = time.perf_counter() - start
    ratios = ', '.join(f"{r.ratio:.3f}" for r in rows[1:] if r.ratio is not None)
    problems = ratio_violations(rows)
    return BenchmarkResult('convergence', resolutions[-1], elapsed, 120.0,
                           f"L1(rho) ratios {ratios}", error='; '.join(problems) or None)


def print_results(results: List[BenchmarkResult]):
    """Print benchmark results in a formatted table."""
    print("\n" + "=" * 90)
    print("  URHYDRO - PERFORMANCE BENCHMARK RESULTS")
    print("=" * 90)
    print(f"\n  {'Benchmark':<22} {'Items':>8} {'Time (s)':>10} {'Budget (s)':>11} {'Status':<7} Detail")
    print("-" * 90)
    for r in results:
        detail = r.error or r.detail
        print(f"  {r.name:<22} {r.items:>8,} {r.elapsed_s:>10.2f} {r.budget_s:>11.1f} {r.status:<7} {detail}")
    print("=" * 90 + "\n")


def main() -> int:
    parser = argparse.ArgumentParser(description='Benchmark the exact solver and the Godunov scheme')
    parser.add_argument('--problems', type=int, default=1000, help='Random problems in the residual suite (default: 1000)')
    parser.add_argument('--seed', type=int, default=20240601, help='RNG seed (default: 20240601)')
    parser.add_argument('--n-cells', type=int, default=800, help='Godunov cells (default: 800)')
    parser.add_argument('--workers', type=int, default=1, help='Flux worker processes (default: 1)')
    parser.add_argument('--skip-godunov', action='store_true', help='Skip the Godunov timing run')
    parser.add_argument('--skip-convergence', action='store_true', help='Skip the 100..800 cell convergence study')
    parser.add_argument('--convergence-config', type=Path, default=CONFIG_DIR / 'convergence.yml',
                        help='Convergence problem config (default: config/convergence.yml)')
    parser.add_argument('--log-level', default='WARNING', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])
    args = parser.parse_args()

    setup_logging(log_level=args.log_level)

    results = [bench_residual_suite(args.problems, args.seed)]
    if not args.skip_godunov:
        results.append(bench_godunov(args.n_cells, args.workers))
    if not args.skip_convergence:
        results.append(bench_convergence(args.convergence_config, args.workers))
    print_results(results)
    return 0 if all(r.status == "OK" for r in results) else 1


if __name__ == '__main__':
    sys.exit(main())
