"""
Waves Module
============
Rarefaction and shock curves rho(vx) behind a single wave.
"""

from .family import Family

from .cubic import (
    real_cubic_roots,
    polish_root
)

from .rarefaction import (
    RarefactionCurve,
    RarefactionFan,
    rtilde,
    rho_of_vx,
    vx_of_rho,
    head_tail_speeds,
    state_in_fan
)

from .shock import (
    ShockCurve,
    ShockResult,
    shock_speed,
    post_shock_density,
    post_shock_tangential,
    rh_residuals,
    planar_shock_density,
    planar_shock_speed
)

__all__ = [
    'Family',
    'real_cubic_roots',
    'polish_root',
    'RarefactionCurve',
    'RarefactionFan',
    'rtilde',
    'rho_of_vx',
    'vx_of_rho',
    'head_tail_speeds',
    'state_in_fan',
    'ShockCurve',
    'ShockResult',
    'shock_speed',
    'post_shock_density',
    'post_shock_tangential',
    'rh_residuals',
    'planar_shock_density',
    'planar_shock_speed'
]
