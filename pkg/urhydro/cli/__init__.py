"""
CLI Module
==========
Problem configs, mode runners and CSV/JSON output for scripts/run_riemann.py.
"""

from .problem_config import (
    Mode,
    StateConfig,
    OutputGrid,
    CurveConfig,
    SchemeOptions,
    ProblemConfig,
    validate_config,
    read_config_mapping,
    load_problem_config,
    parse_state_flag,
    apply_overrides
)

from .tables import (
    snapshot_frame,
    curve_frame,
    godunov_frame,
    convergence_frame,
    overlay_diff_frame,
    read_profile,
    format_csv,
    write_tables,
    format_summary,
    write_summary
)

from .runners import (
    RunOutput,
    run_exact_snapshot,
    run_wave_curves,
    run_godunov,
    run_convergence,
    run_overlay_diff,
    run
)

__all__ = [
    'Mode',
    'StateConfig',
    'OutputGrid',
    'CurveConfig',
    'SchemeOptions',
    'ProblemConfig',
    'validate_config',
    'read_config_mapping',
    'load_problem_config',
    'parse_state_flag',
    'apply_overrides',
    'snapshot_frame',
    'curve_frame',
    'godunov_frame',
    'convergence_frame',
    'overlay_diff_frame',
    'read_profile',
    'format_csv',
    'write_tables',
    'format_summary',
    'write_summary',
    'RunOutput',
    'run_exact_snapshot',
    'run_wave_curves',
    'run_godunov',
    'run_convergence',
    'run_overlay_diff',
    'run'
]
