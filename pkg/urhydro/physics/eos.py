"""
Ultrarelativistic equation of state
===================================
p = cs2 * rho with a constant sound speed. All wave formulas in the
package read cs2 and kappa = cs2 / (1 + cs2) from one EosParams value.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Union

from urhydro.errors import DomainError


@dataclass(frozen=True)
class EosParams:
    """Squared sound speed and the derived exponent kappa."""
    cs2: float
    kappa: float = field(init=False)

    def __post_init__(self):
        cs2 = float(self.cs2)
        if not (0.0 < cs2 < 1.0) or math.isnan(cs2):
            raise DomainError(f"cs2 must lie in (0, 1), got {self.cs2!r}")
        object.__setattr__(self, 'cs2', cs2)
        object.__setattr__(self, 'kappa', cs2 / (1.0 + cs2))

    @classmethod
    def from_string(cls, text: Union[str, float, int]) -> 'EosParams':
        """Parse '1/3', '0.25' or a plain number."""
        if isinstance(text, (int, float)):
            return cls(float(text))
        try:
            value = Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError) as e:
            raise DomainError(f"cannot parse cs2 from {text!r}: {e}") from e
        return cls(float(value))

    @property
    def sound_speed(self) -> float:
        return math.sqrt(self.cs2)

    @property
    def enthalpy_factor(self) -> float:
        """(rho + p) / rho"""
        return 1.0 + self.cs2

    def to_dict(self) -> Dict[str, Any]:
        return {'cs2': self.cs2, 'kappa': self.kappa}


def _check_rho(rho: float) -> None:
    if not rho > 0.0:
        raise DomainError(f"energy density must be positive, got {rho!r}")


def pressure(rho: float, eos: EosParams) -> float:
    """p = cs2 * rho"""
    _check_rho(rho)
    return eos.cs2 * rho


def entropy_density(rho: float, eos: EosParams) -> float:
    """
    Entropy density s = rho^(1/(1+cs2)) with the normalisation constant set to 1.
    """
    _check_rho(rho)
    return rho ** (1.0 / (1.0 + eos.cs2))


def entropy_current(rho: float, lorentz: float, eos: EosParams) -> float:
    """Time component s*W of the entropy current."""
    return entropy_density(rho, eos) * lorentz


def entropy_flux(rho: float, lorentz: float, vx: float, eos: EosParams) -> float:
    """Normal flux s*W*vx of the entropy current."""
    return entropy_density(rho, eos) * lorentz * vx
