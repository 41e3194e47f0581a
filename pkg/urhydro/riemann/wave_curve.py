"""
Wave-curve functions
rho = W->(vx) and rho = W<-(vx): the rarefaction branch on the side where
the pressure drops, the shock branch on the other, joined at the ahead state.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from urhydro.errors import VacuumLimitError
from urhydro.physics.eos import EosParams
from urhydro.physics.state import PrimState
from urhydro.waves.family import Family
from urhydro.waves.rarefaction import RarefactionCurve
from urhydro.waves.shock import ShockCurve

logger = logging.getLogger(__name__)

RAREFACTION = "rarefaction"
SHOCK = "shock"
VACUUM = "vacuum"


@dataclass(frozen=True)
class WaveCurveFn:
    """Piecewise wave curve through `ahead`."""
    ahead: PrimState
    family: Family
    eos: EosParams
    rarefaction: RarefactionCurve = field(init=False, repr=False)
    shock: ShockCurve = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, 'rarefaction', RarefactionCurve(self.ahead, self.eos, self.family))
        object.__setattr__(self, 'shock', ShockCurve(self.ahead, self.eos, self.family))

    def branch(self, vx: float) -> str:
        """W->: rarefaction for vx < vx_, shock for vx >= vx_; W<- mirrored."""
        if self.family is Family.RIGHT:
            return RAREFACTION if vx < self.ahead.vx else SHOCK
        return SHOCK if vx < self.ahead.vx else RAREFACTION

    def __call__(self, vx: float) -> float:
        return wave_curve_eval(self, vx)

    def bracket_value(self, vx: float) -> float:
        """Curve value with the vacuum region mapped to rho = 0 (root bracketing)."""
        try:
            return wave_curve_eval(self, vx)
        except VacuumLimitError:
            return 0.0

    def sample_curve(self, vx_grid: List[float]) -> List[Tuple[float, float, str]]:
        """(vx, rho, branch) rows; points past the vacuum velocity get rho = 0."""
        rows = []
        for vx in vx_grid:
            try:
                rows.append((vx, wave_curve_eval(self, vx), self.branch(vx)))
            except VacuumLimitError:
                rows.append((vx, 0.0, VACUUM))
        return rows


def wave_curve_eval(curve: WaveCurveFn, vx: float) -> float:
    """Density behind the wave for post-wave normal velocity vx."""
    if vx == curve.ahead.vx:
        return curve.ahead.rho
    if curve.branch(vx) == RAREFACTION:
        return curve.rarefaction.rho_of_vx(vx)
    shock = curve.shock
    return shock.post_shock_density(vx, shock.shock_speed(vx))
