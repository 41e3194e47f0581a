"""
Rarefaction Wave Curves
=======================
Closed-form rarefaction curves rho(vx) behind a centred fan for
p = cs2 * rho, with and without tangential velocity.

Along a fan rho^kappa * W * vt = a is constant, so
    W^2 (1 - vx^2) = 1 + a^2 rho^(-2 kappa) = R(rho)
and integrating +-dvx/(1 - vx^2) = sqrt(R + cs2 (1 - R)) / (R c_s) d ln rho^kappa
gives
    sign * 2 artanh(vx) - H(rho) = K
with B = sqrt(1 + (1 - cs2) a^2 rho^(-2 kappa)) and
    H(rho) = (2 / c_s) [ln(1 + B) + kappa ln rho] + ln((B - c_s) / (B + c_s)).
H differs from the textbook form with C2 only by constants (absorbed in K)
and stays regular as a -> 0. sign is +1 for the right-moving family.

For a > 0 the density reaches zero at a finite normal velocity (the
tangential speed tends to 1 there); requests beyond it raise
VacuumLimitError.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Tuple

from scipy.optimize import brentq

from urhydro.errors import DomainError, InconsistentInputError, VacuumLimitError
from urhydro.physics.eos import EosParams
from urhydro.physics.state import PrimState, eigenvalues, lorentz, signal_amplitude
from urhydro.settings import (
    BISECTION_TOL,
    CURVE_RESIDUAL_TOL,
    PLANAR_SWITCHOVER,
    RHO_FLOOR,
)
from urhydro.waves.family import Family

logger = logging.getLogger(__name__)

_LOG_RHO_FLOOR = math.log(RHO_FLOOR)
# brentq refuses rtol below 4 * machine epsilon
_BRENT_RTOL = 4.0 * 2.220446049250313e-16


def _log1pexp(w: float) -> float:
    """ln(1 + e^w) without overflow"""
    if w > 0.0:
        return w + math.log1p(math.exp(-w))
    return math.log1p(math.exp(w))


@dataclass(frozen=True)
class RarefactionCurve:
    """Rarefaction curve through `ahead` for one wave family."""
    ahead: PrimState
    eos: EosParams
    family: Family
    a: float = field(init=False)
    planar: bool = field(init=False)
    constant: float = field(init=False)

    def __post_init__(self):
        ahead = self.ahead
        a = ahead.rho ** self.eos.kappa * lorentz(ahead) * ahead.vt
        object.__setattr__(self, 'a', a)
        planar = (1.0 - self.eos.cs2) * a * a * ahead.rho ** (-2.0 * self.eos.kappa) < PLANAR_SWITCHOVER
        object.__setattr__(self, 'planar', planar)
        k = self.family.sign * 2.0 * math.atanh(ahead.vx) - self._h(math.log(ahead.rho))
        object.__setattr__(self, 'constant', k)

    # -----------------------------------------------------------------
    # closed-form relation
    # -----------------------------------------------------------------

    def _b(self, log_rho: float) -> float:
        """B = sqrt(1 + (1 - cs2) u), u = a^2 rho^(-2 kappa)"""
        if self.a == 0.0:
            return 1.0
        w = math.log1p(-self.eos.cs2) + 2.0 * math.log(self.a) - 2.0 * self.eos.kappa * log_rho
        return math.exp(0.5 * _log1pexp(w))

    def _h(self, log_rho: float) -> float:
        c = self.eos.sound_speed
        kappa = self.eos.kappa
        if self.planar:
            return 2.0 * kappa * log_rho / c
        b = self._b(log_rho)
        return (2.0 / c) * (math.log1p(b) + kappa * log_rho) + (math.log1p(-c / b) - math.log1p(c / b))

    @property
    def vacuum_velocity(self) -> float:
        """Normal velocity at which the fan reaches rho -> 0."""
        if self.planar:
            return -float(self.family.sign)
        c = self.eos.sound_speed
        h_vac = (math.log1p(-self.eos.cs2) + 2.0 * math.log(self.a)) / c
        return math.tanh(self.family.sign * 0.5 * (h_vac + self.constant))

    def rtilde(self, rho: float) -> float:
        return rtilde(rho, self)

    def is_rarefaction_side(self, vx: float, tol: float = 0.0) -> bool:
        return self.family.sign * (vx - self.ahead.vx) <= tol

    def rho_of_vx(self, vx: float) -> float:
        return rho_of_vx(vx, self)

    def vx_of_rho(self, rho: float) -> float:
        return vx_of_rho(rho, self)

    def tangential_speed(self, rho: float, vx: float) -> float:
        """vt = a W^-1 rho^-kappa with W^2 = R(rho) / (1 - vx^2)"""
        if self.a == 0.0:
            return 0.0
        log_u = 2.0 * math.log(self.a) - 2.0 * self.eos.kappa * math.log(rho)
        frac = 1.0 / (1.0 + math.exp(-log_u)) if log_u > -700.0 else math.exp(log_u)
        return math.sqrt((1.0 - vx) * (1.0 + vx) * frac)

    def amplitude(self, rho: float) -> float:
        """A of the composition law; depends only on rho along the curve."""
        return signal_amplitude(self.rtilde(rho), self.eos)

    def characteristic_speed(self, rho: float, vx: float) -> float:
        """xi_plus (right family) or xi_minus (left family) of a curve state"""
        a = self.family.sign * self.amplitude(rho)
        return (vx + a) / (1.0 + vx * a)

    def state_at(self, rho: float) -> PrimState:
        vx = self.vx_of_rho(rho)
        try:
            return PrimState(rho, vx, self.tangential_speed(rho, vx), self.ahead.tdir)
        except DomainError as e:
            raise VacuumLimitError(f"fan state at rho={rho!r} is at the vacuum limit: {e}") from e

    def invariant(self, state: PrimState) -> float:
        """rho^kappa W vt; equals `a` on every state of the fan"""
        return state.rho ** self.eos.kappa * lorentz(state) * state.vt

    def fan(self, star_vx: float, star_rho: float) -> 'RarefactionFan':
        head, tail = head_tail_speeds(self, star_vx, star_rho)
        return RarefactionFan(self, star_vx, star_rho, head, tail)


@dataclass(frozen=True)
class RarefactionFan:
    """Centred fan between the ahead state and a star state on the curve."""
    curve: RarefactionCurve
    star_vx: float
    star_rho: float
    head: float
    tail: float

    @property
    def bounds(self) -> Tuple[float, float]:
        return (min(self.head, self.tail), max(self.head, self.tail))

    def state_in_fan(self, xi: float) -> PrimState:
        return state_in_fan(xi, self)


# =====================================================================
# OPERATIONS
# =====================================================================

def rtilde(rho: float, curve: RarefactionCurve) -> float:
    """R(rho) = 1 + a^2 rho^(-2 kappa) = W^2 (1 - vx^2) along the curve"""
    if not rho > 0.0:
        raise DomainError(f"rho must be positive, got {rho!r}")
    if curve.a == 0.0:
        return 1.0
    return 1.0 + curve.a * curve.a * rho ** (-2.0 * curve.eos.kappa)


def rho_of_vx(vx: float, curve: RarefactionCurve) -> float:
    """Density behind the fan for a post-wave normal velocity vx."""
    if not -1.0 < vx < 1.0:
        raise DomainError(f"normal velocity must lie in (-1, 1), got {vx!r}")
    ahead = curve.ahead
    if vx == ahead.vx:
        return ahead.rho
    if not curve.is_rarefaction_side(vx, tol=1e-15):
        raise DomainError(
            f"vx={vx!r} is on the shock side of the {curve.family.value} rarefaction "
            f"(ahead vx={ahead.vx!r})"
        )

    target = curve.family.sign * 2.0 * math.atanh(vx) - curve.constant
    log_ahead = math.log(ahead.rho)

    if curve.planar:
        log_rho = target * curve.eos.sound_speed / (2.0 * curve.eos.kappa)
        if log_rho < _LOG_RHO_FLOOR:
            raise VacuumLimitError(f"rarefaction to vx={vx!r} drops rho below {RHO_FLOOR:g}")
        return math.exp(min(log_rho, log_ahead))

    if target - curve._h(_LOG_RHO_FLOOR) <= 0.0:
        raise VacuumLimitError(
            f"vx={vx!r} lies beyond the vacuum velocity {curve.vacuum_velocity!r} "
            f"of the {curve.family.value} rarefaction"
        )
    upper = target - curve._h(log_ahead)
    if upper >= 0.0:
        return ahead.rho

    log_rho = brentq(
        lambda s: curve._h(s) - target,
        _LOG_RHO_FLOOR, log_ahead,
        xtol=BISECTION_TOL, rtol=_BRENT_RTOL, maxiter=200
    )
    return math.exp(log_rho)


def vx_of_rho(rho: float, curve: RarefactionCurve) -> float:
    """Normal velocity behind the fan for a density rho <= ahead.rho."""
    if not rho > 0.0:
        raise DomainError(f"rho must be positive, got {rho!r}")
    if rho < RHO_FLOOR:
        raise VacuumLimitError(f"rho={rho!r} is below the floor {RHO_FLOOR:g}")
    if rho > curve.ahead.rho * (1.0 + 1e-12):
        raise DomainError(f"rho={rho!r} exceeds the ahead density {curve.ahead.rho!r}")
    if rho == curve.ahead.rho:
        return curve.ahead.vx
    return math.tanh(curve.family.sign * 0.5 * (curve._h(math.log(rho)) + curve.constant))


def head_tail_speeds(curve: RarefactionCurve, star_vx: float, star_rho: float) -> Tuple[float, float]:
    """Speeds of the fan head (ahead state) and tail (star state)."""
    on_curve_vx = vx_of_rho(star_rho, curve)
    residual = abs(on_curve_vx - star_vx)
    if residual > CURVE_RESIDUAL_TOL:
        raise InconsistentInputError(
            f"star state (vx={star_vx!r}, rho={star_rho!r}) is not on the "
            f"{curve.family.value} rarefaction curve (residual {residual:.3e})"
        )
    xi_minus, _, xi_plus = eigenvalues(curve.ahead, curve.eos)
    head = xi_plus if curve.family is Family.RIGHT else xi_minus
    tail = curve.characteristic_speed(star_rho, star_vx)
    if star_rho == curve.ahead.rho:
        tail = head
    return head, tail


def state_in_fan(xi: float, fan: RarefactionFan) -> PrimState:
    """State inside the fan at similarity coordinate xi."""
    lo, hi = fan.bounds
    slack = 1e-15 * max(1.0, abs(xi))
    if not lo - slack <= xi <= hi + slack:
        raise DomainError(f"xi={xi!r} outside the fan [{lo!r}, {hi!r}]")

    curve = fan.curve
    if xi == fan.head or fan.star_rho == curve.ahead.rho:
        return curve.ahead
    if xi == fan.tail:
        return curve.state_at(fan.star_rho)

    log_star = math.log(fan.star_rho)
    log_ahead = math.log(curve.ahead.rho)

    def mismatch(s: float) -> float:
        rho = math.exp(s)
        return curve.characteristic_speed(rho, curve.vx_of_rho(rho)) - xi

    f_star, f_ahead = mismatch(log_star), mismatch(log_ahead)
    if f_star == 0.0:
        return curve.state_at(fan.star_rho)
    if f_ahead == 0.0:
        return curve.ahead
    if f_star * f_ahead > 0.0:
        # xi within roundoff of an edge
        return curve.state_at(fan.star_rho) if abs(f_star) < abs(f_ahead) else curve.ahead

    log_rho = brentq(mismatch, log_star, log_ahead, xtol=BISECTION_TOL, rtol=_BRENT_RTOL, maxiter=200)
    return curve.state_at(math.exp(log_rho))
