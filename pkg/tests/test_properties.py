"""
Property Tests
==============
Invariants of the state conversions and wave curves over generated inputs.

Runs derandomized so the generated examples are the same on every run.
"""

import math
import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import brentq

from urhydro.physics import (
    ConsState,
    EosParams,
    PrimState,
    cons_to_prim,
    eigenvalues,
    eigenvalues_radical,
    prim_to_cons,
)
from urhydro.waves import Family, RarefactionCurve, ShockCurve, rho_of_vx, vx_of_rho

PROPERTY_SETTINGS = settings(max_examples=200, derandomize=True, deadline=None)

eos_params = st.sampled_from([0.1, 1.0 / 3.0, 0.9]).map(EosParams)
families = st.sampled_from([Family.LEFT, Family.RIGHT])


@st.composite
def prim_states(draw, max_v2: float = 0.9, max_vt: float = 1.0):
    rho = 10.0 ** draw(st.floats(min_value=-3.0, max_value=3.0))
    speed = math.sqrt(max_v2) * draw(st.floats(min_value=0.0, max_value=1.0))
    angle = draw(st.floats(min_value=0.0, max_value=math.pi))
    vt = min(speed * math.sin(angle), max_vt)
    angle_t = draw(st.floats(min_value=0.0, max_value=2.0 * math.pi))
    return PrimState.from_angle(rho, speed * math.cos(angle), vt, angle_t)


# ============================================================================
# STATE CONVERSIONS
# ============================================================================

@settings(max_examples=10_000, derandomize=True, deadline=None)
@given(prim=prim_states(max_v2=0.98), eos=eos_params)
def test_prim_cons_roundtrip(prim, eos):
    back = cons_to_prim(prim_to_cons(prim, eos), eos)
    assert back.rho == pytest.approx(prim.rho, rel=1e-12)
    assert back.vx == pytest.approx(prim.vx, abs=1e-12)
    assert back.vy == pytest.approx(prim.vy, abs=1e-12)
    assert back.vz == pytest.approx(prim.vz, abs=1e-12)


@PROPERTY_SETTINGS
@given(
    E=st.floats(min_value=1e-3, max_value=1e3),
    fraction=st.floats(min_value=0.0, max_value=0.95),
    angle=st.floats(min_value=0.0, max_value=2.0 * math.pi),
    eos=eos_params,
)
def test_inversion_takes_physical_root(E, fraction, angle, eos):
    """The recovered E + p matches a bracketed root of the enthalpy quadratic."""
    m = fraction * E
    cons = ConsState(E, m * math.cos(angle), m * math.sin(angle))
    prim = cons_to_prim(cons, eos)

    b = eos.enthalpy_factor * E

    def quadratic(x: float) -> float:
        return x * x - b * x + eos.cs2 * m * m

    x = brentq(quadratic, 0.5 * b, b, xtol=1e-15 * b)
    assert prim.vx == pytest.approx(cons.Sx / x, rel=1e-10, abs=1e-14)
    assert prim.pressure(eos) == pytest.approx(x - E, rel=1e-8, abs=1e-12 * E)
    assert prim.v2 < 1.0


@PROPERTY_SETTINGS
@given(prim=prim_states(max_v2=0.98), eos=eos_params)
def test_eigenvalue_forms_agree(prim, eos):
    composed = eigenvalues(prim, eos)
    radical = eigenvalues_radical(prim, eos)
    assert np.allclose(composed, radical, rtol=0.0, atol=1e-12)
    assert -1.0 < composed[0] <= composed[1] <= composed[2] < 1.0


# ============================================================================
# WAVE CURVES
# ============================================================================

@PROPERTY_SETTINGS
@given(
    ahead=prim_states(max_v2=0.9, max_vt=0.8),
    family=families,
    ratio=st.floats(min_value=0.1, max_value=0.999),
    eos=eos_params,
)
def test_rarefaction_roundtrip(ahead, family, ratio, eos):
    curve = RarefactionCurve(ahead, eos, family)
    rho = ratio * ahead.rho
    vx = vx_of_rho(rho, curve)
    assert family.sign * (vx - ahead.vx) <= 0.0
    assert rho_of_vx(vx, curve) == pytest.approx(rho, rel=1e-8)


@PROPERTY_SETTINGS
@given(
    ahead=prim_states(),
    family=families,
    fraction=st.floats(min_value=0.01, max_value=0.95),
    eos=eos_params,
)
def test_shock_satisfies_jump_conditions(ahead, family, fraction, eos):
    sign = family.sign
    vx = ahead.vx + sign * fraction * (1.0 - sign * ahead.vx)
    result = ShockCurve(ahead, eos, family).evaluate(vx)
    assert result.max_residual < 1e-9
    assert result.rho > ahead.rho
    assert -1.0 < result.Vs < 1.0
