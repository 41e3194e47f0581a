#!/usr/bin/env python
"""
Riemann Problem Runner
======================
CLI for the exact ultrarelativistic Riemann solver and the Godunov scheme.

This script:
1. Loads a YAML/JSON problem config and applies flag overrides
2. Runs the selected mode (exact-snapshot, wave-curves, godunov, convergence)
3. Writes CSV tables to stdout or --output and a JSON summary to --summary

Banner, logs and summary go to stderr; stdout carries only CSV.

Usage:
    python scripts/run_riemann.py --config config/shock_tube.yml
    python scripts/run_riemann.py --config config/wave_curves.yml --output out/curves
    python scripts/run_riemann.py --cs2 1/3 --left 1,0.5,0.333 --right 20,0.5,0.5 --t 1
    python scripts/run_riemann.py --config config/convergence.yml --workers 4
"""

import sys
import argparse
import logging
from pathlib import Path
from datetime import datetime

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from urhydro.cli import apply_overrides, read_config_mapping, run, write_summary, write_tables
from urhydro.errors import EXIT_OK, UrHydroError
from urhydro.logging_config import setup_logging

logger = logging.getLogger(__name__)


def eprint(*args) -> None:
    print(*args, file=sys.stderr)


def print_banner(quiet: bool = False):
    """Print the application banner."""
    if quiet:
        return
    eprint()
    eprint("=" * 70)
    eprint("  urhydro - Exact Riemann Solver, p = cs2 * rho")
    eprint("  Shocks, rarefactions and contacts with tangential velocity")
    eprint("=" * 70)
    eprint()


def print_summary(mode: str, summary: dict, written: list, elapsed_seconds: float, quiet: bool = False):
    """Print a formatted run summary."""
    if quiet:
        return
    eprint()
    eprint("=" * 70)
    eprint(f"  RUN SUMMARY ({mode})")
    eprint("=" * 70)
    if 'pattern' in summary:
        eprint(f"    Wave pattern:      {summary['pattern']}")
    star = summary.get('star') or summary.get('intersection')
    if star:
        eprint(f"    Star vx:           {star['vx']:.15g}")
        eprint(f"    Star rho:          {star['rho']:.15g}")
    if 'steps' in summary:
        eprint(f"    Godunov steps:     {summary['steps']:,}")
        eprint(f"    Riemann solves:    {summary['riemann_solves']:,}")
    for row in summary.get('rows', []):
        ratio = row['ratio']
        ratio_text = f"{ratio:.3f}" if ratio is not None else "-"
        eprint(f"    n={row['n']:>6}  L1(rho)={row['L1_rho']:.6e}  ratio={ratio_text}")
    eprint(f"    Tables written:    {len(written)}")
    eprint()
    eprint(f"  ELAPSED TIME: {elapsed_seconds:.2f} seconds")
    eprint("=" * 70)
    eprint()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Exact Riemann solver for the ultrarelativistic EOS',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s --config config/shock_tube.yml           # Exact snapshot to stdout
  %(prog)s --config config/intersection.yml -o out  # Wave curves, one CSV each
  %(prog)s --config config/shock_tube.yml --overlay profile.csv

Exit codes:
  0  success
  2  configuration error
  3  solver failure
        """
    )

    parser.add_argument('--config', help='Problem config file (YAML or JSON)')
    parser.add_argument('--mode', choices=['exact-snapshot', 'wave-curves', 'godunov', 'convergence'])
    parser.add_argument('--cs2', help='Squared sound speed, e.g. 1/3 or 0.25')
    parser.add_argument('--left', metavar='RHO,VX[,VT[,ANGLE]]', help='Left state')
    parser.add_argument('--right', metavar='RHO,VX[,VT[,ANGLE]]', help='Right state')
    parser.add_argument('--t', type=float, help='Snapshot time')
    parser.add_argument('--x-min', type=float, help='Left end of the output range / domain')
    parser.add_argument('--x-max', type=float, help='Right end of the output range / domain')
    parser.add_argument('--n-points', type=int, help='Number of snapshot points')
    parser.add_argument('--cfl', type=float, help='Courant number in (0, 1]')
    parser.add_argument('--t-end', type=float, help='Final time of Godunov runs')
    parser.add_argument('--n-cells', type=int, help='Cells of a single Godunov run')
    parser.add_argument('--resolutions', type=int, nargs='+', metavar='N', help='Convergence resolutions')
    parser.add_argument('--workers', type=int, help='Processes for interface fluxes (default: 1)')
    parser.add_argument('--overlay', help='External profile CSV to difference against the exact snapshot')
    parser.add_argument('-o', '--output', help='Output file (one table) or directory (default: stdout)')
    parser.add_argument('--summary', help='JSON summary file (default: stderr)')
    parser.add_argument('--log-file', help='Rotating log file')
    parser.add_argument('--quiet', action='store_true', help='No banner or summary')
    parser.add_argument(
        '--log-level',
        default='INFO',
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
        help='Logging verbosity level (default: INFO)'
    )
    return parser


def main(argv=None) -> int:
    """Main entry point; returns the exit code."""
    args = build_parser().parse_args(argv)
    setup_logging(log_file=args.log_file, log_level=args.log_level)
    print_banner(args.quiet)

    start_time = datetime.now()
    try:
        base = read_config_mapping(args.config) if args.config else {}
        cfg = apply_overrides(base, {
            'mode': args.mode,
            'cs2': args.cs2,
            'left': args.left,
            'right': args.right,
            't': args.t,
            'x_min': args.x_min,
            'x_max': args.x_max,
            'n_points': args.n_points,
            'cfl': args.cfl,
            't_end': args.t_end,
            'n_cells': args.n_cells,
            'resolutions': args.resolutions,
            'workers': args.workers,
        }, source=args.config or '<flags>')

        logger.info(f"Mode: {cfg.mode.value}, cs2={cfg.cs2}")
        logger.info(f"  Left:  {cfg.left.model_dump()}")
        logger.info(f"  Right: {cfg.right.model_dump()}")

        output = run(cfg, args.overlay)
        written = write_tables(output.tables, args.output)
        write_summary(output.summary, args.summary)

        elapsed = (datetime.now() - start_time).total_seconds()
        print_summary(cfg.mode.value, output.summary, written, elapsed, args.quiet)
        return EXIT_OK

    except UrHydroError as e:
        logger.debug("Run failed", exc_info=True)
        elapsed = (datetime.now() - start_time).total_seconds()
        eprint()
        eprint("=" * 70)
        eprint(f"  RUN FAILED ({type(e).__name__})")
        eprint(f"  Error: {e}")
        eprint(f"  Elapsed: {elapsed:.2f} seconds")
        eprint("=" * 70)
        return e.exit_code


if __name__ == '__main__':
    sys.exit(main())
