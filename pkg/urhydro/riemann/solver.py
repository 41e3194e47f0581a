"""
Exact Riemann Solver
====================
Solves L | R as  L  W<-  L*  C  R*  W->  R.

The star normal velocity is the intersection of the left curve W<-_L and
the right curve W->_R. The mismatch W<-_L(vx) - W->_R(vx) is monotone
decreasing in vx, so it is bracketed by exponential stepping from the two
ahead velocities and refined with Brent's method in rapidity artanh(vx),
then polished with Newton steps on the log-density mismatch. When exactly
one wave is a shock the star density is taken from the shock branch.
Rarefaction branches are clamped to rho = 0 beyond their vacuum velocity
while bracketing; a root in the clamped region is a vacuum and is refused.

Sampling uses half-open, left-closed intervals: a query exactly on a wave
or on the contact returns the state to its right.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from scipy.optimize import brentq

from urhydro.errors import (
    DomainError,
    NoIntersectionError,
    SolverFailureError,
    UrHydroError,
    VacuumLimitError,
)
from urhydro.physics.eos import EosParams
from urhydro.physics.state import PrimState, mirror
from urhydro.riemann.wave_curve import SHOCK, WaveCurveFn
from urhydro.settings import BRACKET_MARGIN, MAX_ITERATIONS, POLISH_STEPS, ROOT_TOL, ZERO_STRENGTH
from urhydro.waves.family import Family
from urhydro.waves.rarefaction import RarefactionFan

logger = logging.getLogger(__name__)

_BRENT_RTOL = 4.0 * 2.220446049250313e-16
_ORDER_TOL = 1e-12
_FIRST_STEP = 0.25
# relative finite-difference step for the polishing slope
_POLISH_H = 1e-7


# =====================================================================
# SOLUTION TYPES
# =====================================================================

class WaveKind(str, Enum):
    SHOCK = "shock"
    RAREFACTION = "rarefaction"
    NONE = "none"

    @property
    def letter(self) -> str:
        return {"shock": "S", "rarefaction": "R", "none": "N"}[self.value]


@dataclass(frozen=True)
class Wave:
    """
    One nonlinear wave of the solution.

    `speed` is the shock speed, the fan head, or for a zero-strength wave the
    characteristic speed of the ahead state; `tail` is set for fans only.
    """
    family: Family
    kind: WaveKind
    speed: float
    tail: Optional[float] = None
    fan: Optional[RarefactionFan] = field(default=None, compare=False, repr=False)

    @property
    def inner(self) -> float:
        """Edge facing the contact."""
        return self.tail if self.tail is not None else self.speed

    @property
    def speeds(self) -> Tuple[float, ...]:
        """Speeds in increasing xi order."""
        if self.tail is None:
            return (self.speed,)
        return (self.speed, self.tail) if self.family is Family.LEFT else (self.tail, self.speed)

    def to_dict(self) -> Dict[str, Any]:
        return {'type': self.kind.value, 'speeds': list(self.speeds)}


@dataclass(frozen=True)
class RiemannSolution:
    left: PrimState
    right: PrimState
    eos: EosParams
    star_vx: float
    star_rho: float
    vtL_star: float
    vtR_star: float
    left_wave: Wave
    right_wave: Wave
    left_star: PrimState
    right_star: PrimState

    @property
    def contact_speed(self) -> float:
        return self.star_vx

    @property
    def pattern(self) -> str:
        """Two letters, left wave first: S shock, R rarefaction, N zero strength."""
        return self.left_wave.kind.letter + self.right_wave.kind.letter

    def wave_speeds(self) -> List[float]:
        """All interface speeds of the fan, left to right, contact included."""
        return [*self.left_wave.speeds, self.contact_speed, *self.right_wave.speeds]

    def summary(self) -> Dict[str, Any]:
        return {
            'pattern': self.pattern,
            'star': {
                'vx': self.star_vx,
                'rho': self.star_rho,
                'vtL': self.vtL_star,
                'vtR': self.vtR_star,
            },
            'waves': {
                'left': self.left_wave.to_dict(),
                'right': self.right_wave.to_dict(),
            },
        }

    def sample(self, xi: float) -> PrimState:
        return sample(self, xi)

    def snapshot(self, t: float, xs: Sequence[float]) -> List[PrimState]:
        return snapshot(self, t, xs)


# =====================================================================
# SOLVE
# =====================================================================

def _find_star_velocity(left_curve: WaveCurveFn, right_curve: WaveCurveFn) -> float:
    def mismatch(y: float) -> float:
        vx = math.tanh(y)
        return left_curve.bracket_value(vx) - right_curve.bracket_value(vx)

    y_limit = math.atanh(1.0 - BRACKET_MARGIN)
    lo = math.atanh(min(left_curve.ahead.vx, right_curve.ahead.vx))
    hi = math.atanh(max(left_curve.ahead.vx, right_curve.ahead.vx))
    f_lo, f_hi = mismatch(lo), mismatch(hi)

    step = _FIRST_STEP
    while f_lo < 0.0:
        if lo <= -y_limit:
            raise NoIntersectionError(
                f"wave curves do not intersect above vx={-1.0 + BRACKET_MARGIN!r} "
                f"(L={left_curve.ahead}, R={right_curve.ahead})"
            )
        hi, f_hi = lo, f_lo
        lo = max(lo - step, -y_limit)
        f_lo = mismatch(lo)
        step *= 2.0
    step = _FIRST_STEP
    while f_hi > 0.0:
        if hi >= y_limit:
            raise NoIntersectionError(
                f"wave curves do not intersect below vx={1.0 - BRACKET_MARGIN!r} "
                f"(L={left_curve.ahead}, R={right_curve.ahead})"
            )
        lo, f_lo = hi, f_hi
        hi = min(hi + step, y_limit)
        f_hi = mismatch(hi)
        step *= 2.0

    if f_lo == 0.0:
        return math.tanh(lo)
    if f_hi == 0.0:
        return math.tanh(hi)
    y_star = brentq(mismatch, lo, hi, xtol=ROOT_TOL, rtol=_BRENT_RTOL, maxiter=MAX_ITERATIONS)
    return _polish_star_velocity(left_curve, right_curve, math.tanh(y_star), math.tanh(lo), math.tanh(hi))


def _polish_star_velocity(left_curve: WaveCurveFn, right_curve: WaveCurveFn,
                          vx: float, lower: float, upper: float) -> float:
    """
    Newton steps on ln W<-_L(vx) - ln W->_R(vx) with a central-difference slope.

    A step is kept only if it stays in [lower, upper] and shrinks the mismatch;
    any failure to evaluate returns the best velocity found so far.
    """
    def log_mismatch(v: float) -> float:
        return math.log(left_curve(v)) - math.log(right_curve(v))

    try:
        g = log_mismatch(vx)
        for _ in range(POLISH_STEPS):
            if g == 0.0:
                break
            h = _POLISH_H * (1.0 - abs(vx))
            slope = (log_mismatch(vx + h) - log_mismatch(vx - h)) / (2.0 * h)
            # the mismatch decreases with vx
            if not slope < 0.0:
                break
            candidate = vx - g / slope
            if not lower <= candidate <= upper:
                break
            g_candidate = log_mismatch(candidate)
            if not abs(g_candidate) < abs(g):
                break
            vx, g = candidate, g_candidate
    except UrHydroError as e:
        logger.debug(f"star velocity polish stopped at vx={vx!r}: {e}")
    return vx


def _star_density(left_curve: WaveCurveFn, right_curve: WaveCurveFn, star_vx: float,
                  rho_left: float, rho_right: float) -> float:
    """A lone shock fixes the density; otherwise the two curve values are averaged."""
    left_shock = left_curve.branch(star_vx) == SHOCK
    right_shock = right_curve.branch(star_vx) == SHOCK
    if left_shock and not right_shock:
        return rho_left
    if right_shock and not left_shock:
        return rho_right
    return 0.5 * (rho_left + rho_right)


def _build_wave(curve: WaveCurveFn, star_vx: float, star_rho: float) -> Tuple[Wave, float]:
    """Wave between curve.ahead and the star state, plus the star tangential speed."""
    ahead = curve.ahead
    if abs(star_vx - ahead.vx) < ZERO_STRENGTH:
        return Wave(curve.family, WaveKind.NONE, curve.shock.xi_ahead), ahead.vt
    if curve.branch(star_vx) == SHOCK:
        vs = curve.shock.shock_speed(star_vx)
        vt = curve.shock.post_shock_tangential(star_vx, vs, star_rho)
        return Wave(curve.family, WaveKind.SHOCK, vs), vt
    fan = curve.rarefaction.fan(star_vx, star_rho)
    vt = curve.rarefaction.tangential_speed(star_rho, star_vx)
    return Wave(curve.family, WaveKind.RAREFACTION, fan.head, fan.tail, fan), vt


def _star_state(rho: float, vx: float, vt: float, ahead: PrimState) -> PrimState:
    try:
        return PrimState(rho, vx, vt, ahead.tdir)
    except DomainError as e:
        raise VacuumLimitError(f"star state at the vacuum limit: {e}") from e


def solve(left: PrimState, right: PrimState, eos: EosParams) -> RiemannSolution:
    """Exact solution of the Riemann problem left | right."""
    left_curve = WaveCurveFn(left, Family.LEFT, eos)
    right_curve = WaveCurveFn(right, Family.RIGHT, eos)

    if left.rho == right.rho and left.vx == right.vx:
        # at most a tangential jump: pure contact
        star_vx, star_rho = left.vx, left.rho
    else:
        star_vx = _find_star_velocity(left_curve, right_curve)
        try:
            rho_left = left_curve(star_vx)
            rho_right = right_curve(star_vx)
        except VacuumLimitError as e:
            raise VacuumLimitError(
                f"rarefactions open a vacuum at vx={star_vx!r} (L={left}, R={right})"
            ) from e
        star_rho = _star_density(left_curve, right_curve, star_vx, rho_left, rho_right)

    left_wave, vt_left = _build_wave(left_curve, star_vx, star_rho)
    right_wave, vt_right = _build_wave(right_curve, star_vx, star_rho)

    if not (left_wave.inner <= star_vx + _ORDER_TOL and star_vx <= right_wave.inner + _ORDER_TOL):
        raise SolverFailureError(
            f"wave speeds out of order: left {left_wave.speeds}, contact {star_vx!r}, "
            f"right {right_wave.speeds}"
        )

    solution = RiemannSolution(
        left=left,
        right=right,
        eos=eos,
        star_vx=star_vx,
        star_rho=star_rho,
        vtL_star=vt_left,
        vtR_star=vt_right,
        left_wave=left_wave,
        right_wave=right_wave,
        left_star=_star_state(star_rho, star_vx, vt_left, left),
        right_star=_star_state(star_rho, star_vx, vt_right, right),
    )
    logger.debug(
        f"Riemann solve {solution.pattern}: vx*={star_vx:.15g} rho*={star_rho:.15g} "
        f"vtL*={vt_left:.15g} vtR*={vt_right:.15g}"
    )
    return solution


def mirror_problem(left: PrimState, right: PrimState) -> Tuple[PrimState, PrimState]:
    """The problem reflected through x = 0: (mirror(R), mirror(L))."""
    return mirror(right), mirror(left)


# =====================================================================
# SAMPLING
# =====================================================================

def _sample_left(sol: RiemannSolution, xi: float) -> PrimState:
    wave = sol.left_wave
    if xi < wave.speed:
        return sol.left
    if wave.kind is WaveKind.RAREFACTION and xi < wave.tail:
        return wave.fan.state_in_fan(xi)
    return sol.left_star


def _sample_right(sol: RiemannSolution, xi: float) -> PrimState:
    wave = sol.right_wave
    if xi >= wave.speed:
        return sol.right
    if wave.kind is WaveKind.RAREFACTION and xi >= wave.tail:
        return wave.fan.state_in_fan(xi)
    return sol.right_star


def sample(sol: RiemannSolution, xi: float) -> PrimState:
    """State at similarity coordinate xi = x / t, |xi| < 1."""
    if not -1.0 < xi < 1.0:
        raise DomainError(f"similarity coordinate must lie in (-1, 1), got {xi!r}")
    if xi < sol.contact_speed:
        return _sample_left(sol, xi)
    return _sample_right(sol, xi)


def snapshot(sol: RiemannSolution, t: float, xs: Sequence[float]) -> List[PrimState]:
    """Solution at time t on the positions xs; |x/t| >= 1 maps to the initial states."""
    if not t > 0.0:
        raise DomainError(f"snapshot time must be positive, got {t!r}")
    states = []
    for x in xs:
        xi = x / t
        if xi <= -1.0:
            states.append(sol.left)
        elif xi >= 1.0:
            states.append(sol.right)
        else:
            states.append(sample(sol, xi))
    return states
