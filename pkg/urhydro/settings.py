"""
Solver settings loader
Reads config/solver_config.yml once and exposes module-level constants.
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict

import yaml

logger = logging.getLogger(__name__)


# =============================================================================
# CONFIG LOADING
# =============================================================================
def _load_solver_config() -> Dict[str, Any]:
    """Load solver configuration from YAML file."""
    override = os.environ.get('URHYDRO_SOLVER_CONFIG')
    config_path = Path(override) if override else (
        Path(__file__).parent.parent / 'config' / 'solver_config.yml'
    )
    if config_path.exists():
        with open(config_path, 'r', encoding='utf-8') as f:
            return yaml.safe_load(f) or {}
    # Hard-coded defaults below apply when the file is absent
    return {}


SOLVER_CONFIG = _load_solver_config()

_state = SOLVER_CONFIG.get('state', {})
VELOCITY_GUARD = float(_state.get('velocity_guard', 1.0e-12))
DET_A_FLOOR = float(_state.get('det_a_floor', 0.0))

_rarefaction = SOLVER_CONFIG.get('rarefaction', {})
RHO_FLOOR = float(_rarefaction.get('rho_floor', 1.0e-300))
BISECTION_TOL = float(_rarefaction.get('bisection_tol', 1.0e-14))
PLANAR_SWITCHOVER = float(_rarefaction.get('planar_switchover', 1.0e-12))
CURVE_RESIDUAL_TOL = float(_rarefaction.get('curve_residual_tol', 1.0e-9))

_shock = SOLVER_CONFIG.get('shock', {})
NEWTON_POLISH_ITERATIONS = int(_shock.get('newton_polish_iterations', 2))
LAX_TOL = float(_shock.get('lax_tol', 1.0e-12))
IMAG_TOL = float(_shock.get('imag_tol', 1.0e-10))

_riemann = SOLVER_CONFIG.get('riemann', {})
BRACKET_MARGIN = float(_riemann.get('bracket_margin', 1.0e-12))
ROOT_TOL = float(_riemann.get('root_tol', 1.0e-14))
POLISH_STEPS = int(_riemann.get('polish_steps', 2))
ZERO_STRENGTH = float(_riemann.get('zero_strength', 1.0e-13))
MAX_ITERATIONS = int(_riemann.get('max_iterations', 200))

_godunov = SOLVER_CONFIG.get('godunov', {})
DEFAULT_CFL = float(_godunov.get('cfl', 0.5))
DEFAULT_BOUNDARY = str(_godunov.get('boundary', 'outflow'))
EXACT_SUBSAMPLES = int(_godunov.get('subsamples', 8))
CONVERGENCE_RATIO_MIN = float(_godunov.get('ratio_min', 1.2))
CONVERGENCE_RATIO_MAX = float(_godunov.get('ratio_max', 2.2))
