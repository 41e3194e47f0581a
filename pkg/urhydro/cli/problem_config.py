"""
Problem Configuration
=====================
Pydantic models for Riemann-problem configs (YAML or JSON files) plus the
command-line overrides applied on top of them.

Example (YAML):

    cs2: "1/3"
    mode: exact-snapshot
    left:  {rho: 1.0,  vx: 0.5, vt: 0.3333333333333333}
    right: {rho: 20.0, vx: 0.5, vt: 0.5}
    t: 1.0
    grid: {x_min: -1.0, x_max: 1.0, n_points: 2001}
"""

import logging
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from urhydro.errors import ConfigError
from urhydro.physics.eos import EosParams
from urhydro.physics.state import PrimState
from urhydro.settings import DEFAULT_CFL, VELOCITY_GUARD
from urhydro.waves.family import Family

logger = logging.getLogger(__name__)


class Mode(str, Enum):
    EXACT_SNAPSHOT = "exact-snapshot"
    WAVE_CURVES = "wave-curves"
    GODUNOV = "godunov"
    CONVERGENCE = "convergence"


# =====================================================================
# MODELS
# =====================================================================

class StateConfig(BaseModel):
    """One constant state; `angle` (radians) orients vt in the y-z plane."""
    model_config = ConfigDict(extra='forbid')

    rho: float = Field(gt=0.0, allow_inf_nan=False)
    vx: float = Field(gt=-1.0, lt=1.0)
    vt: float = Field(default=0.0, ge=0.0, lt=1.0)
    angle: float = 0.0

    @model_validator(mode='after')
    def check_subluminal(self) -> 'StateConfig':
        v2 = self.vx * self.vx + self.vt * self.vt
        if not v2 < 1.0 - VELOCITY_GUARD:
            raise ValueError(f"superluminal state: vx^2 + vt^2 = {v2!r}")
        return self

    def to_prim(self) -> PrimState:
        return PrimState.from_angle(self.rho, self.vx, self.vt, self.angle)


class OutputGrid(BaseModel):
    model_config = ConfigDict(extra='forbid')

    x_min: float = -1.0
    x_max: float = 1.0
    n_points: int = Field(default=2001, ge=1)

    @model_validator(mode='after')
    def check_range(self) -> 'OutputGrid':
        if self.x_max < self.x_min or (self.n_points > 1 and self.x_max == self.x_min):
            raise ValueError(f"empty output range [{self.x_min}, {self.x_max}]")
        return self

    def points(self) -> List[float]:
        """
        Evenly spaced points, written as centre + half-width * (2i - (n-1)) / (n-1)
        so that a symmetric range gives exactly antisymmetric points.
        """
        if self.n_points == 1:
            return [self.x_min]
        center = 0.5 * (self.x_min + self.x_max)
        half = 0.5 * (self.x_max - self.x_min)
        last = self.n_points - 1
        return [center + half * ((2 * i - last) / last) for i in range(self.n_points)]


class CurveConfig(BaseModel):
    """Wave curves through one ahead state (wave-curves mode)."""
    model_config = ConfigDict(extra='forbid')

    name: str
    ahead: StateConfig
    families: List[Family] = Field(default_factory=lambda: [Family.LEFT, Family.RIGHT])
    vx_min: float = Field(default=-0.999, gt=-1.0, lt=1.0)
    vx_max: float = Field(default=0.999, gt=-1.0, lt=1.0)
    n_points: int = Field(default=399, ge=1)

    def vx_grid(self) -> List[float]:
        """Post-wave normal velocities; a single point sits on the ahead state."""
        if self.n_points == 1:
            return [self.ahead.vx]
        return OutputGrid(x_min=self.vx_min, x_max=self.vx_max, n_points=self.n_points).points()


class SchemeOptions(BaseModel):
    model_config = ConfigDict(extra='forbid')

    cfl: float = Field(default=DEFAULT_CFL, gt=0.0, le=1.0)
    t_end: float = Field(default=0.4, gt=0.0)
    n_cells: int = Field(default=400, ge=2)
    resolutions: List[int] = Field(default_factory=lambda: [100, 200, 400, 800])
    workers: int = Field(default=1, ge=1)

    @field_validator('resolutions')
    @classmethod
    def check_resolutions(cls, value: List[int]) -> List[int]:
        if not value:
            raise ValueError("at least one resolution is required")
        if any(n < 2 for n in value):
            raise ValueError(f"resolutions must be >= 2 cells, got {value}")
        if any(b <= a for a, b in zip(value, value[1:])):
            raise ValueError(f"resolutions must be strictly ascending, got {value}")
        return value


class ProblemConfig(BaseModel):
    model_config = ConfigDict(extra='forbid', use_enum_values=False)

    cs2: str = "1/3"
    mode: Mode = Mode.EXACT_SNAPSHOT
    left: StateConfig
    right: StateConfig
    t: float = Field(default=1.0, gt=0.0)
    grid: OutputGrid = Field(default_factory=OutputGrid)
    scheme: SchemeOptions = Field(default_factory=SchemeOptions)
    curves: List[CurveConfig] = Field(default_factory=list)

    @field_validator('cs2', mode='before')
    @classmethod
    def parse_cs2(cls, value: Union[str, float, int]) -> str:
        EosParams.from_string(value)
        return str(value).strip()

    @property
    def eos(self) -> EosParams:
        return EosParams.from_string(self.cs2)

    def left_state(self) -> PrimState:
        return self.left.to_prim()

    def right_state(self) -> PrimState:
        return self.right.to_prim()

    def wave_curves(self) -> List[CurveConfig]:
        """Configured curves, or W<- through L and W-> through R when none are given."""
        if self.curves:
            return self.curves
        return [
            CurveConfig(name='left', ahead=self.left, families=[Family.LEFT]),
            CurveConfig(name='right', ahead=self.right, families=[Family.RIGHT]),
        ]


# =====================================================================
# LOADING
# =====================================================================

def _format_validation_error(error: ValidationError, source: str) -> str:
    lines = [f"invalid problem config {source}:"]
    for item in error.errors():
        field = '.'.join(str(part) for part in item['loc']) or '<root>'
        lines.append(f"  {field}: {item['msg']}")
    return '\n'.join(lines)


def validate_config(data: Dict[str, Any], source: str = '<dict>') -> ProblemConfig:
    try:
        return ProblemConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(_format_validation_error(e, source)) from e


def read_config_mapping(path: Union[str, Path]) -> Dict[str, Any]:
    """Raw mapping from a YAML or JSON file (JSON is parsed as YAML)."""
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        mark = getattr(e, 'problem_mark', None)
        where = f" (line {mark.line + 1}, column {mark.column + 1})" if mark else ""
        raise ConfigError(f"cannot parse {path}{where}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be a mapping, got {type(data).__name__}")
    logger.debug(f"Loaded problem config {path}")
    return data


def load_problem_config(path: Union[str, Path]) -> ProblemConfig:
    return validate_config(read_config_mapping(path), str(path))


def parse_state_flag(text: str) -> Dict[str, float]:
    """'rho,vx[,vt[,angle]]' -> StateConfig fields"""
    parts = [p.strip() for p in text.split(',')]
    if not 2 <= len(parts) <= 4:
        raise ConfigError(f"state flag must be rho,vx[,vt[,angle]], got {text!r}")
    try:
        values = [float(p) for p in parts]
    except ValueError as e:
        raise ConfigError(f"non-numeric value in state flag {text!r}") from e
    return dict(zip(('rho', 'vx', 'vt', 'angle'), values))


_NESTED_OVERRIDES = {
    'x_min': 'grid', 'x_max': 'grid', 'n_points': 'grid',
    'cfl': 'scheme', 't_end': 'scheme', 'n_cells': 'scheme',
    'resolutions': 'scheme', 'workers': 'scheme',
}


def apply_overrides(base: Optional[Dict[str, Any]], overrides: Dict[str, Any],
                    source: str = '<flags>') -> ProblemConfig:
    """
    Merge flag overrides into a raw config mapping and validate.

    Keys are the flag destinations: cs2, mode, left, right, t, x_min, x_max,
    n_points, cfl, t_end, n_cells, resolutions, workers. None values are skipped.
    """
    data: Dict[str, Any] = dict(base or {})
    for key, value in overrides.items():
        if value is None:
            continue
        if key in ('left', 'right') and isinstance(value, str):
            value = parse_state_flag(value)
        if key in _NESTED_OVERRIDES:
            section = dict(data.get(_NESTED_OVERRIDES[key]) or {})
            section[key] = value
            data[_NESTED_OVERRIDES[key]] = section
        else:
            data[key] = value
    return validate_config(data, source)
