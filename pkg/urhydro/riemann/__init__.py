"""
Riemann Module
==============
Wave-curve intersection and sampling of the self-similar solution.
"""

from .wave_curve import (
    WaveCurveFn,
    wave_curve_eval,
    RAREFACTION,
    SHOCK,
    VACUUM
)

from .solver import (
    RiemannSolution,
    Wave,
    WaveKind,
    solve,
    sample,
    snapshot,
    mirror_problem
)

__all__ = [
    'WaveCurveFn',
    'wave_curve_eval',
    'RAREFACTION',
    'SHOCK',
    'VACUUM',
    'RiemannSolution',
    'Wave',
    'WaveKind',
    'solve',
    'sample',
    'snapshot',
    'mirror_problem'
]
