"""
Physics Module
==============
Equation of state and state conversions for p = cs2 * rho.
"""

from .eos import (
    EosParams,
    pressure,
    entropy_density,
    entropy_current,
    entropy_flux
)

from .state import (
    PrimState,
    ConsState,
    Flux,
    lorentz,
    prim_to_cons,
    cons_to_prim,
    flux_x,
    eigenvalues,
    eigenvalues_radical,
    det_a_factor,
    signal_amplitude,
    mirror
)

__all__ = [
    'EosParams',
    'pressure',
    'entropy_density',
    'entropy_current',
    'entropy_flux',
    'PrimState',
    'ConsState',
    'Flux',
    'lorentz',
    'prim_to_cons',
    'cons_to_prim',
    'flux_x',
    'eigenvalues',
    'eigenvalues_radical',
    'det_a_factor',
    'signal_amplitude',
    'mirror'
]
