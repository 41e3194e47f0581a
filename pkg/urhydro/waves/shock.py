"""
Shock Wave Curves
=================
Rankine-Hugoniot shock curves for p = cs2 * rho with tangential velocity.

Barred quantities belong to the state in front of the shock (`ahead`).
For a post-shock normal velocity vx the shock speed Vs is a root of

    (1 - vx_ V)[(1 - vx V)(1 - vx_ V) - (vx - V)(vx_ - V) / cs2]
        - vt_^2 (1 - vx V)(1 - V^2) = 0

and the post-shock density and tangential speed follow in closed form.
Jump conditions are written in the (1 + cs2)-scaled form
    [[rho W^2 - kappa rho]] V = [[rho W^2 vx]]
    [[rho W^2 vx]] V          = [[rho W^2 vx^2 + kappa rho]]
    [[rho W^2 vy]] V          = [[rho W^2 vx vy]]   (and z)
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from urhydro.errors import DomainError, SolverFailureError
from urhydro.physics.eos import EosParams
from urhydro.physics.state import PrimState, eigenvalues, lorentz
from urhydro.settings import LAX_TOL
from urhydro.waves.cubic import real_cubic_roots
from urhydro.waves.family import Family

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShockResult:
    """Shock speed and post-shock state for one point of a shock curve."""
    Vs: float
    rho: float
    vt: float
    residuals: np.ndarray = field(compare=False)

    @property
    def max_residual(self) -> float:
        return float(np.max(np.abs(self.residuals)))


@dataclass(frozen=True)
class ShockCurve:
    """Shock curve through `ahead` for one wave family."""
    ahead: PrimState
    eos: EosParams
    family: Family
    xi_ahead: float = field(init=False)
    w2_ahead: float = field(init=False)

    def __post_init__(self):
        xi_minus, _, xi_plus = eigenvalues(self.ahead, self.eos)
        object.__setattr__(self, 'xi_ahead', xi_plus if self.family is Family.RIGHT else xi_minus)
        object.__setattr__(self, 'w2_ahead', lorentz(self.ahead) ** 2)

    def is_shock_side(self, vx: float) -> bool:
        return self.family.sign * (vx - self.ahead.vx) >= 0.0

    def cubic_coefficients(self, vx: float) -> Tuple[float, float, float, float]:
        """(c3, c2, c1, c0) of the shock-speed cubic in V."""
        u = self.ahead.vx
        t2 = self.ahead.vt * self.ahead.vt
        k = 1.0 / self.eos.cs2
        e0 = 1.0 - k * u * vx
        e1 = -(u + vx) * (1.0 - k)
        e2 = u * vx - k
        c0 = e0 - t2
        c1 = e1 - u * e0 + t2 * vx
        c2 = e2 - u * e1 + t2
        c3 = -u * e2 - t2 * vx
        return c3, c2, c1, c0

    def shock_speed(self, vx: float) -> float:
        return shock_speed(vx, self)

    def post_shock_density(self, vx: float, Vs: float) -> float:
        return post_shock_density(vx, Vs, self)

    def post_shock_tangential(self, vx: float, Vs: float, rho: float) -> float:
        return post_shock_tangential(vx, Vs, rho, self)

    def behind_state(self, vx: float, Vs: float, rho: float) -> PrimState:
        vt = post_shock_tangential(vx, Vs, rho, self)
        return PrimState(rho, vx, vt, self.ahead.tdir)

    def evaluate(self, vx: float) -> ShockResult:
        """Shock speed, density, tangential speed and RH residuals at vx."""
        vs = shock_speed(vx, self)
        rho = post_shock_density(vx, vs, self)
        behind = self.behind_state(vx, vs, rho)
        return ShockResult(vs, rho, behind.vt, rh_residuals(self.ahead, behind, vs, self.eos))


# =====================================================================
# OPERATIONS
# =====================================================================

def _density_formula(vx: float, vs: float, curve: ShockCurve) -> float:
    ahead = curve.ahead
    u = ahead.vx
    t2 = ahead.vt * ahead.vt
    one_u = 1.0 - u * vs
    one_v = 1.0 - vx * vs
    bracket = (1.0 - vx) * (1.0 + vx) * one_u * one_u - t2 * one_v * one_v
    return ahead.rho * curve.w2_ahead * (u - vs) * bracket / ((vx - vs) * one_v * one_u)


def shock_speed(vx: float, curve: ShockCurve) -> float:
    """
    Physical shock speed for post-shock normal velocity vx.

    Among the real cubic roots in (-1, 1) keep those that are Lax-ordered
    against the ahead characteristic, compress the fluid and leave a
    subluminal post-shock state; return the largest (right family) or
    smallest (left family).
    """
    if not -1.0 < vx < 1.0:
        raise DomainError(f"normal velocity must lie in (-1, 1), got {vx!r}")
    ahead = curve.ahead
    if vx == ahead.vx:
        return curve.xi_ahead
    if not curve.is_shock_side(vx):
        raise DomainError(
            f"vx={vx!r} is on the rarefaction side of the {curve.family.value} shock "
            f"(ahead vx={ahead.vx!r})"
        )

    sign = curve.family.sign
    roots = real_cubic_roots(*curve.cubic_coefficients(vx))
    candidates = []
    for vs in roots:
        if not -1.0 < vs < 1.0 or vs == vx:
            continue
        if sign * (vs - curve.xi_ahead) < -LAX_TOL:
            continue
        rho = _density_formula(vx, vs, curve)
        if not (math.isfinite(rho) and rho >= ahead.rho * (1.0 - 1e-12)):
            continue
        vt = ahead.vt * abs((1.0 - vx * vs) / (1.0 - ahead.vx * vs))
        if vx * vx + vt * vt >= 1.0:
            continue
        candidates.append(vs)

    if not candidates:
        raise SolverFailureError(
            f"no admissible shock speed for vx={vx!r} behind {ahead} "
            f"({curve.family.value} family, cubic roots {roots})"
        )
    return max(candidates) if sign > 0 else min(candidates)


def post_shock_density(vx: float, Vs: float, curve: ShockCurve) -> float:
    """Post-shock energy density as a function of vx and the shock speed."""
    if vx == curve.ahead.vx:
        return curve.ahead.rho
    if vx == Vs:
        raise DomainError(f"shock speed equals the flow speed vx={vx!r}: degenerate contact")
    return _density_formula(vx, Vs, curve)


def post_shock_tangential(vx: float, Vs: float, rho: float, curve: ShockCurve) -> float:
    """
    Post-shock tangential speed.

    Substituting rho W^2 = rho_ W_^2 (vx_ - V)(1 - vx_ V) / ((vx - V)(1 - vx V))
    into the tangential jump conditions gives vt = vt_ (1 - vx V) / (1 - vx_ V).
    """
    ahead = curve.ahead
    if vx == ahead.vx:
        return ahead.vt
    vt = ahead.vt * abs((1.0 - vx * Vs) / (1.0 - ahead.vx * Vs))
    if not vx * vx + vt * vt < 1.0:
        raise SolverFailureError(
            f"superluminal post-shock state: rho={rho!r}, vx={vx!r}, vt={vt!r}"
        )
    return vt


def rh_residuals(ahead: PrimState, behind: PrimState, Vs: float, eos: EosParams) -> np.ndarray:
    """
    Normalised residuals of the four jump conditions.

    Each residual is divided by max(1, largest individual term entering that
    condition): relative for large fluxes, absolute for small ones.
    """
    kappa = eos.kappa

    def terms(s: PrimState):
        rw2 = s.rho / (1.0 - s.v2)
        return (
            rw2 - kappa * s.rho,
            rw2 * s.vx,
            rw2 * s.vx * s.vx + kappa * s.rho,
            rw2 * s.vy,
            rw2 * s.vx * s.vy,
            rw2 * s.vz,
            rw2 * s.vx * s.vz,
        )

    d1, m1, p1, y1, fy1, z1, fz1 = terms(behind)
    d0, m0, p0, y0, fy0, z0, fz0 = terms(ahead)

    def normalised(lhs_hi, lhs_lo, rhs_hi, rhs_lo) -> float:
        residual = (lhs_hi - lhs_lo) * Vs - (rhs_hi - rhs_lo)
        scale = max(abs(lhs_hi * Vs), abs(lhs_lo * Vs), abs(rhs_hi), abs(rhs_lo), 1.0)
        return residual / scale

    return np.array([
        normalised(d1, d0, m1, m0),
        normalised(m1, m0, p1, p0),
        normalised(y1, y0, fy1, fy0),
        normalised(z1, z0, fz1, fz0),
    ])


# =====================================================================
# ZERO-TANGENTIAL CLOSED FORMS
# =====================================================================

def _require_planar(curve: ShockCurve) -> None:
    if curve.ahead.vt != 0.0:
        raise DomainError("closed-form planar shock relations need vt = 0 ahead of the shock")


def planar_shock_density(vx: float, curve: ShockCurve) -> float:
    """rho = rho_ (1 + Theta + sqrt((1 + Theta)^2 - 1)) for vanishing tangential velocity"""
    _require_planar(curve)
    u = curve.ahead.vx
    theta = (vx - u) ** 2 / ((1.0 - vx * vx) * (1.0 - u * u) * 2.0 * curve.eos.kappa * (1.0 - curve.eos.kappa))
    return curve.ahead.rho * (1.0 + theta + math.sqrt(theta * (2.0 + theta)))


def planar_shock_speed(vx: float, rho: float, curve: ShockCurve) -> Optional[float]:
    """Vs = [[rho W^2 vx]] / [[rho W^2 - kappa rho]]; None for a zero-strength jump"""
    _require_planar(curve)
    ahead = curve.ahead
    kappa = curve.eos.kappa
    rw2 = rho / (1.0 - vx * vx)
    rw2_ahead = ahead.rho / (1.0 - ahead.vx * ahead.vx)
    denom = (rw2 - kappa * rho) - (rw2_ahead - kappa * ahead.rho)
    if denom == 0.0:
        return None
    return (rw2 * vx - rw2_ahead * ahead.vx) / denom
