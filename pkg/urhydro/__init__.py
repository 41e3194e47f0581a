"""
urhydro - Ultrarelativistic Riemann Toolkit
Exact Riemann solver for p = cs2 * rho with tangential velocities,
plus a first-order Godunov scheme validated against it.
"""

__version__ = "1.0.0"
__author__ = "urhydro numerics team"
