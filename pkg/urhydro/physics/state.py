"""
Primitive and conserved states
==============================
PrimState stores the tangential velocity as a magnitude plus a unit
direction in the y-z plane; wave formulas only need the magnitude and the
direction can change only across the contact.

Conserved vector U = (E, Sx, Sy, Sz) with
    E   = (rho + p) W^2 - p
    S^i = (rho + p) W^2 v^i
and normal flux F^x = (S^x, S^x v^x + p, S^y v^x, S^z v^x).

Array helpers at the bottom work on (n, 4) numpy arrays with columns
(E, Sx, Sy, Sz) for conserved and (rho, vx, vy, vz) for primitive data.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from urhydro.errors import DomainError, UnphysicalStateError
from urhydro.physics.eos import EosParams
from urhydro.settings import DET_A_FLOOR, VELOCITY_GUARD

logger = logging.getLogger(__name__)

DEFAULT_TDIR: Tuple[float, float] = (1.0, 0.0)


# =====================================================================
# STATE TYPES
# =====================================================================

@dataclass(frozen=True)
class PrimState:
    """Energy density, normal velocity, tangential speed and direction."""
    rho: float
    vx: float
    vt: float = 0.0
    tdir: Tuple[float, float] = field(default=DEFAULT_TDIR)

    def __post_init__(self):
        rho, vx, vt = float(self.rho), float(self.vx), float(self.vt)
        if not rho > 0.0 or math.isinf(rho):
            raise DomainError(f"rho must be positive and finite, got {self.rho!r}")
        if not vt >= 0.0:
            raise DomainError(f"tangential speed must be non-negative, got {self.vt!r}")
        v2 = vx * vx + vt * vt
        if not v2 < 1.0 - VELOCITY_GUARD:
            raise DomainError(f"superluminal state: vx={vx!r}, vt={vt!r} (v^2={v2!r})")

        if vt == 0.0:
            tdir = DEFAULT_TDIR
        else:
            ty, tz = (float(c) for c in self.tdir)
            norm = math.hypot(ty, tz)
            tdir = (ty / norm, tz / norm) if norm > 0.0 else DEFAULT_TDIR

        object.__setattr__(self, 'rho', rho)
        object.__setattr__(self, 'vx', vx)
        object.__setattr__(self, 'vt', vt)
        object.__setattr__(self, 'tdir', tdir)

    @classmethod
    def from_components(cls, rho: float, vx: float, vy: float = 0.0, vz: float = 0.0) -> 'PrimState':
        vt = math.hypot(vy, vz)
        tdir = (vy / vt, vz / vt) if vt > 0.0 else DEFAULT_TDIR
        return cls(rho, vx, vt, tdir)

    @classmethod
    def from_angle(cls, rho: float, vx: float, vt: float, angle: float = 0.0) -> 'PrimState':
        """Tangential direction given as an angle (radians) from the y axis."""
        return cls(rho, vx, vt, (math.cos(angle), math.sin(angle)))

    @property
    def vy(self) -> float:
        return self.vt * self.tdir[0]

    @property
    def vz(self) -> float:
        return self.vt * self.tdir[1]

    @property
    def v2(self) -> float:
        return self.vx * self.vx + self.vt * self.vt

    @property
    def lorentz(self) -> float:
        return lorentz(self)

    def pressure(self, eos: EosParams) -> float:
        return eos.cs2 * self.rho

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.rho, self.vx, self.vy, self.vz)


@dataclass(frozen=True)
class ConsState:
    """Conserved energy and momentum densities."""
    E: float
    Sx: float
    Sy: float = 0.0
    Sz: float = 0.0

    @property
    def momentum(self) -> float:
        return math.sqrt(self.Sx * self.Sx + self.Sy * self.Sy + self.Sz * self.Sz)

    def is_physical(self) -> bool:
        return self.E > 0.0 and self.momentum < self.E

    def as_array(self) -> np.ndarray:
        return np.array([self.E, self.Sx, self.Sy, self.Sz], dtype=float)


@dataclass(frozen=True)
class Flux:
    """Components of the normal flux vector F^x."""
    fE: float
    fSx: float
    fSy: float = 0.0
    fSz: float = 0.0

    def as_array(self) -> np.ndarray:
        return np.array([self.fE, self.fSx, self.fSy, self.fSz], dtype=float)


# =====================================================================
# POINTWISE OPERATIONS
# =====================================================================

def lorentz(prim: PrimState) -> float:
    """W = 1 / sqrt(1 - vx^2 - vt^2)"""
    one_minus_v2 = 1.0 - prim.vx * prim.vx - prim.vt * prim.vt
    if not one_minus_v2 > 0.0:
        raise DomainError(f"superluminal velocity: vx={prim.vx}, vt={prim.vt}")
    return 1.0 / math.sqrt(one_minus_v2)


def prim_to_cons(prim: PrimState, eos: EosParams) -> ConsState:
    w2 = 1.0 / (1.0 - prim.vx * prim.vx - prim.vt * prim.vt)
    p = eos.cs2 * prim.rho
    x = (prim.rho + p) * w2
    return ConsState(x - p, x * prim.vx, x * prim.vy, x * prim.vz)


def cons_to_prim(cons: ConsState, eos: EosParams) -> PrimState:
    """
    Analytic inversion for p = cs2 * rho.

    With x = E + p = (rho + p) W^2 and m = |S| the relation p = cs2 * rho
    becomes x^2 - (1 + cs2) E x + cs2 m^2 = 0; the larger root is the one
    giving v = m / x < 1 and p >= 0.
    """
    E = cons.E
    m = cons.momentum
    if not E > 0.0:
        raise UnphysicalStateError(f"non-positive energy density E={E!r}")
    if not m < E:
        raise UnphysicalStateError(f"|S| >= E (|S|={m!r}, E={E!r})")

    b = eos.enthalpy_factor * E
    disc = b * b - 4.0 * eos.cs2 * m * m
    if disc < 0.0:
        raise UnphysicalStateError(f"negative discriminant {disc!r} for E={E!r}, |S|={m!r}")

    x = 0.5 * (b + math.sqrt(disc))
    rho = (x - m) * (x + m) / (x * eos.enthalpy_factor)
    try:
        return PrimState.from_components(rho, cons.Sx / x, cons.Sy / x, cons.Sz / x)
    except DomainError as e:
        raise UnphysicalStateError(f"recovered state is not physical: {e}") from e


def flux_x(prim: PrimState, eos: EosParams) -> Flux:
    w2 = 1.0 / (1.0 - prim.vx * prim.vx - prim.vt * prim.vt)
    p = eos.cs2 * prim.rho
    sx = (prim.rho + p) * w2 * prim.vx
    return Flux(sx, sx * prim.vx + p, sx * prim.vy, sx * prim.vz)


def det_a_factor(prim: PrimState, eos: EosParams) -> float:
    """1 - v_i v^i cs2; the Jacobian dU/dSigma is invertible while this is positive."""
    return 1.0 - prim.v2 * eos.cs2


def eigenvalues(prim: PrimState, eos: EosParams) -> Tuple[float, float, float]:
    """
    Characteristic speeds (xi_minus, xi_zero, xi_plus) of dF^x/dU.

    Uses the velocity-composition form xi = (vx +- A) / (1 +- vx A) with
    A^-2 = 1 + W^2 (1 - vx^2)(1 - cs2) / cs2.
    """
    det_a = det_a_factor(prim, eos)
    assert det_a > DET_A_FLOOR, f"det A factor not positive: {det_a}"

    vx = prim.vx
    r_tilde = (1.0 - vx * vx) / (1.0 - prim.v2)
    a = signal_amplitude(r_tilde, eos)
    return ((vx - a) / (1.0 - vx * a), vx, (vx + a) / (1.0 + vx * a))


def signal_amplitude(r_tilde: float, eos: EosParams) -> float:
    """A for a given W^2 (1 - vx^2); equals c_s when there is no tangential motion."""
    return 1.0 / math.sqrt(1.0 + r_tilde * (1.0 - eos.cs2) / eos.cs2)


def eigenvalues_radical(prim: PrimState, eos: EosParams) -> Tuple[float, float, float]:
    """Explicit radical form of the characteristic speeds."""
    cs2 = eos.cs2
    vx = prim.vx
    v2 = prim.v2
    denom = 1.0 - v2 * cs2
    root = eos.sound_speed * math.sqrt((1.0 - v2) * (1.0 - v2 * cs2 - vx * vx * (1.0 - cs2)))
    base = vx * (1.0 - cs2)
    return ((base - root) / denom, vx, (base + root) / denom)


def mirror(prim: PrimState) -> PrimState:
    """Reflect x -> -x; the tangential components are untouched."""
    return PrimState(prim.rho, -prim.vx, prim.vt, prim.tdir)


# =====================================================================
# ARRAY OPERATIONS (Godunov grid)
# =====================================================================

def prim_array_to_cons(prim: np.ndarray, eos: EosParams) -> np.ndarray:
    rho, vx, vy, vz = prim[:, 0], prim[:, 1], prim[:, 2], prim[:, 3]
    w2 = 1.0 / (1.0 - vx * vx - vy * vy - vz * vz)
    p = eos.cs2 * rho
    x = (rho + p) * w2
    return np.column_stack([x - p, x * vx, x * vy, x * vz])


def physical_mask(cons: np.ndarray, eos: EosParams) -> np.ndarray:
    """True for rows that invert to a subluminal primitive state."""
    E = cons[:, 0]
    m = np.sqrt(cons[:, 1] ** 2 + cons[:, 2] ** 2 + cons[:, 3] ** 2)
    with np.errstate(invalid='ignore'):
        ok = np.isfinite(cons).all(axis=1) & (E > 0.0) & (m < E)
    return ok


def cons_array_to_prim(cons: np.ndarray, eos: EosParams) -> np.ndarray:
    """Vectorised cons_to_prim; rows must satisfy physical_mask."""
    if not physical_mask(cons, eos).all():
        bad = int(np.flatnonzero(~physical_mask(cons, eos))[0])
        raise UnphysicalStateError(f"row {bad} is not physical: {cons[bad].tolist()}")
    E = cons[:, 0]
    m = np.sqrt(cons[:, 1] ** 2 + cons[:, 2] ** 2 + cons[:, 3] ** 2)
    b = eos.enthalpy_factor * E
    x = 0.5 * (b + np.sqrt(b * b - 4.0 * eos.cs2 * m * m))
    rho = (x - m) * (x + m) / (x * eos.enthalpy_factor)
    return np.column_stack([rho, cons[:, 1] / x, cons[:, 2] / x, cons[:, 3] / x])


def flux_array(prim: np.ndarray, eos: EosParams) -> np.ndarray:
    rho, vx, vy, vz = prim[:, 0], prim[:, 1], prim[:, 2], prim[:, 3]
    w2 = 1.0 / (1.0 - vx * vx - vy * vy - vz * vz)
    p = eos.cs2 * rho
    sx = (rho + p) * w2 * vx
    return np.column_stack([sx, sx * vx + p, sx * vy, sx * vz])


def max_signal_speed(prim: np.ndarray, eos: EosParams) -> float:
    """max over cells of |xi_minus|, |xi_plus|"""
    vx = prim[:, 1]
    v2 = vx * vx + prim[:, 2] ** 2 + prim[:, 3] ** 2
    r_tilde = (1.0 - vx * vx) / (1.0 - v2)
    a = 1.0 / np.sqrt(1.0 + r_tilde * (1.0 - eos.cs2) / eos.cs2)
    xi_minus = (vx - a) / (1.0 - vx * a)
    xi_plus = (vx + a) / (1.0 + vx * a)
    return float(np.max(np.maximum(np.abs(xi_minus), np.abs(xi_plus))))