"""
Shock Curve Tests
=================
Jump conditions, Lax ordering and the zero-tangential closed forms.
"""

import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np
import pytest

from urhydro.errors import DomainError
from urhydro.physics import EosParams, PrimState, eigenvalues, mirror
from urhydro.waves import (
    Family,
    ShockCurve,
    planar_shock_density,
    planar_shock_speed,
    post_shock_density,
    rh_residuals,
    shock_speed,
)

AHEAD_STATES = [
    (PrimState(1.0, 0.5, 0.5), Family.RIGHT),
    (PrimState(20.0, 0.5, 0.5), Family.RIGHT),
    (PrimState(1.0, 0.5, 1.0 / 3.0), Family.LEFT),
    (PrimState(1e-3, -0.9, 0.3), Family.RIGHT),
    (PrimState(1e3, 0.1, 0.9), Family.LEFT),
    (PrimState(1.0, 0.0), Family.LEFT),
]

STRENGTHS = [0.05, 0.3, 0.6, 0.9]


def _shock_side_vx(ahead: PrimState, family: Family, fraction: float) -> float:
    """Normal velocity a given fraction of the way from ahead.vx to the light cone."""
    sign = family.sign
    return ahead.vx + sign * fraction * (1.0 - sign * ahead.vx)


# ============================================================================
# JUMP CONDITIONS
# ============================================================================

@pytest.mark.parametrize("cs2", [0.1, 1.0 / 3.0, 0.9])
@pytest.mark.parametrize("ahead, family", AHEAD_STATES)
def test_rankine_hugoniot_residuals(ahead, family, cs2):
    curve = ShockCurve(ahead, EosParams(cs2), family)
    for fraction in STRENGTHS:
        result = curve.evaluate(_shock_side_vx(ahead, family, fraction))
        assert result.max_residual < 1e-10
        assert result.rho > ahead.rho


@pytest.mark.parametrize("Vs", [-0.9, 0.0, 0.4, 0.99])
def test_residuals_vanish_without_jump(eos, Vs):
    state = PrimState(3.0, -0.4, 0.5, (0.6, 0.8))
    assert np.all(rh_residuals(state, state, Vs, eos) == 0.0)


def test_residuals_vanish_across_contact(eos):
    """Equal rho and vx with a tangential jump, moving at vx."""
    ahead = PrimState(2.0, 0.3, 0.1)
    behind = PrimState(2.0, 0.3, 0.6, (0.0, 1.0))
    assert np.max(np.abs(rh_residuals(ahead, behind, ahead.vx, eos))) < 1e-14


def test_perturbed_state_violates_jump_conditions(eos):
    ahead = PrimState(1.0, 0.0)
    curve = ShockCurve(ahead, eos, Family.RIGHT)
    result = curve.evaluate(0.5)
    behind = curve.behind_state(0.5, result.Vs, result.rho)
    assert result.max_residual < 1e-10

    heavier = PrimState(1.5 * behind.rho, behind.vx, behind.vt, behind.tdir)
    assert np.max(np.abs(rh_residuals(ahead, heavier, result.Vs, eos))) > 0.01


def test_residuals_absolute_at_small_scale(eos):
    """Terms below one are not rescaled: a dilute state gives tiny residuals."""
    ahead = PrimState(1e-6, 0.0)
    behind = PrimState(1.5e-6, 0.0)
    residuals = rh_residuals(ahead, behind, 0.5, eos)
    assert np.max(np.abs(residuals)) < 1e-6
    assert np.max(np.abs(residuals)) > 0.0


@pytest.mark.parametrize("ahead, family", AHEAD_STATES)
def test_lax_ordering(eos, ahead, family):
    """The shock outruns the ahead characteristic and is overtaken by the one behind."""
    curve = ShockCurve(ahead, eos, family)
    index = 2 if family is Family.RIGHT else 0
    for fraction in STRENGTHS:
        vx = _shock_side_vx(ahead, family, fraction)
        result = curve.evaluate(vx)
        behind = curve.behind_state(vx, result.Vs, result.rho)
        xi_ahead = eigenvalues(ahead, eos)[index]
        xi_behind = eigenvalues(behind, eos)[index]
        if family is Family.RIGHT:
            assert xi_ahead - 1e-12 <= result.Vs <= xi_behind + 1e-12
        else:
            assert xi_behind - 1e-12 <= result.Vs <= xi_ahead + 1e-12
        assert -1.0 < result.Vs < 1.0


def test_stronger_shock_is_denser(eos):
    ahead = PrimState(1.0, 0.5, 0.5)
    curve = ShockCurve(ahead, eos, Family.RIGHT)
    densities = [curve.evaluate(_shock_side_vx(ahead, Family.RIGHT, f)).rho for f in STRENGTHS]
    assert all(b > a for a, b in zip(densities, densities[1:]))


def test_zero_strength(eos):
    ahead = PrimState(1.0, 0.5, 0.5)
    curve = ShockCurve(ahead, eos, Family.RIGHT)
    assert shock_speed(ahead.vx, curve) == eigenvalues(ahead, eos)[2]
    assert post_shock_density(ahead.vx, curve.xi_ahead, curve) == ahead.rho

    weak = curve.evaluate(ahead.vx + 1e-7)
    assert weak.Vs == pytest.approx(curve.xi_ahead, abs=1e-6)
    assert weak.rho == pytest.approx(ahead.rho, rel=1e-5)


def test_tangential_velocity_across_shock(eos):
    """vt = vt_ |1 - vx Vs| / |1 - vx_ Vs|; the direction is unchanged."""
    ahead = PrimState(1.0, -0.2, 0.6, (0.0, 1.0))
    curve = ShockCurve(ahead, eos, Family.LEFT)
    vx = -0.6
    result = curve.evaluate(vx)
    expected = ahead.vt * abs((1.0 - vx * result.Vs) / (1.0 - ahead.vx * result.Vs))
    assert result.vt == pytest.approx(expected, rel=1e-15)
    behind = curve.behind_state(vx, result.Vs, result.rho)
    assert behind.tdir == (0.0, 1.0)
    assert np.max(np.abs(rh_residuals(ahead, behind, result.Vs, eos))) < 1e-10


# ============================================================================
# ZERO-TANGENTIAL CLOSED FORMS
# ============================================================================

def test_planar_closed_forms():
    """Cubic root and density formula agree with the vt = 0 closed forms."""
    rng = np.random.default_rng(20240603)
    worst_rho = worst_speed = 0.0
    for _ in range(100):
        eos = EosParams((0.1, 1.0 / 3.0, 0.9)[int(rng.integers(3))])
        ahead = PrimState(10.0 ** rng.uniform(-3.0, 3.0), rng.uniform(-0.95, 0.95))
        family = Family.RIGHT if rng.uniform() < 0.5 else Family.LEFT
        curve = ShockCurve(ahead, eos, family)
        vx = _shock_side_vx(ahead, family, rng.uniform(0.01, 0.95))
        result = curve.evaluate(vx)
        rho = planar_shock_density(vx, curve)
        assert result.vt == 0.0
        worst_rho = max(worst_rho, abs(result.rho - rho) / rho)
        worst_speed = max(worst_speed, abs(result.Vs - planar_shock_speed(vx, rho, curve)))
    assert worst_rho < 1e-11
    assert worst_speed < 1e-11


def test_planar_forms_need_zero_tangential(eos):
    curve = ShockCurve(PrimState(1.0, 0.0, 0.1), eos, Family.RIGHT)
    with pytest.raises(DomainError):
        planar_shock_density(0.5, curve)


def test_planar_zero_strength_speed_is_none(eos):
    curve = ShockCurve(PrimState(1.0, 0.2), eos, Family.RIGHT)
    assert planar_shock_speed(0.2, 1.0, curve) is None


# ============================================================================
# DOMAIN AND SYMMETRY
# ============================================================================

def test_rarefaction_side_rejected(eos):
    curve = ShockCurve(PrimState(1.0, 0.5, 0.5), eos, Family.RIGHT)
    with pytest.raises(DomainError):
        shock_speed(0.4, curve)
    with pytest.raises(DomainError):
        shock_speed(1.0, curve)

    left = ShockCurve(PrimState(1.0, 0.5, 0.5), eos, Family.LEFT)
    with pytest.raises(DomainError):
        shock_speed(0.6, left)


@pytest.mark.parametrize("ahead, family", AHEAD_STATES)
def test_mirror_family(eos, ahead, family):
    """Reflecting x maps a shock of one family onto the other."""
    other = Family.LEFT if family is Family.RIGHT else Family.RIGHT
    curve = ShockCurve(ahead, eos, family)
    mirrored = ShockCurve(mirror(ahead), eos, other)
    for fraction in (0.2, 0.7):
        vx = _shock_side_vx(ahead, family, fraction)
        a = curve.evaluate(vx)
        b = mirrored.evaluate(-vx)
        assert b.Vs == pytest.approx(-a.Vs, rel=1e-12, abs=1e-15)
        assert b.rho == pytest.approx(a.rho, rel=1e-12)
        assert b.vt == pytest.approx(a.vt, rel=1e-12, abs=1e-15)
