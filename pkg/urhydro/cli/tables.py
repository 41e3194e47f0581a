"""
Output tables
pandas DataFrames for every CLI mode, written as CSV with 17 significant
digits and '\\n' line endings so that outputs are byte-reproducible.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, TextIO, Tuple, Union

import numpy as np
import pandas as pd

from urhydro.errors import ConfigError
from urhydro.physics.eos import EosParams
from urhydro.physics.state import PrimState

logger = logging.getLogger(__name__)

FLOAT_FORMAT = '%.17g'
SNAPSHOT_COLUMNS = ['x', 'xi', 'rho', 'p', 'vx', 'vt', 'W']
CURVE_COLUMNS = ['vx', 'rho', 'branch']
CONVERGENCE_COLUMNS = ['n', 'L1_rho', 'L1_vx', 'L1_vt', 'ratio']
OVERLAY_COLUMNS = ['x', 'd_rho', 'd_p', 'd_vx', 'd_vt', 'd_W']


# =====================================================================
# FRAME BUILDERS
# =====================================================================

def snapshot_frame(xs: Sequence[float], t: float, states: Sequence[PrimState], eos: EosParams) -> pd.DataFrame:
    return pd.DataFrame({
        'x': list(xs),
        'xi': [x / t for x in xs],
        'rho': [s.rho for s in states],
        'p': [s.pressure(eos) for s in states],
        'vx': [s.vx for s in states],
        'vt': [s.vt for s in states],
        'W': [s.lorentz for s in states],
    }, columns=SNAPSHOT_COLUMNS)


def curve_frame(rows: Iterable[Tuple[float, float, str]]) -> pd.DataFrame:
    return pd.DataFrame(list(rows), columns=CURVE_COLUMNS)


def godunov_frame(centers: np.ndarray, numeric: np.ndarray, exact: np.ndarray) -> pd.DataFrame:
    """Cell-centre primitives of the scheme next to the exact cell averages."""
    vt_numeric = np.hypot(numeric[:, 2], numeric[:, 3])
    vt_exact = np.hypot(exact[:, 2], exact[:, 3])
    return pd.DataFrame({
        'x': centers,
        'rho': numeric[:, 0],
        'vx': numeric[:, 1],
        'vt': vt_numeric,
        'rho_exact': exact[:, 0],
        'vx_exact': exact[:, 1],
        'vt_exact': vt_exact,
        'err_rho': numeric[:, 0] - exact[:, 0],
        'err_vx': numeric[:, 1] - exact[:, 1],
        'err_vt': vt_numeric - vt_exact,
    })


def convergence_frame(rows: Sequence[Any]) -> pd.DataFrame:
    return pd.DataFrame([row.to_dict() for row in rows], columns=CONVERGENCE_COLUMNS)


def read_profile(path: Union[str, Path]) -> pd.DataFrame:
    """Externally produced profile in the snapshot schema, sorted by x."""
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"overlay file not found: {path}")
    try:
        df = pd.read_csv(path, comment='#')
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise ConfigError(f"cannot read overlay {path}: {e}") from e
    missing = [c for c in SNAPSHOT_COLUMNS if c != 'xi' and c not in df.columns]
    if missing:
        raise ConfigError(f"overlay {path} lacks columns {missing}")
    return df.sort_values('x', kind='mergesort').reset_index(drop=True)


def overlay_diff_frame(exact: pd.DataFrame, overlay: pd.DataFrame) -> pd.DataFrame:
    """overlay - exact at the exact table's x, overlay linearly interpolated."""
    xs = exact['x'].to_numpy()
    out = {'x': xs}
    for col in ('rho', 'p', 'vx', 'vt', 'W'):
        interpolated = np.interp(xs, overlay['x'].to_numpy(dtype=float), overlay[col].to_numpy(dtype=float))
        out[f'd_{col}'] = interpolated - exact[col].to_numpy()
    return pd.DataFrame(out, columns=OVERLAY_COLUMNS)


# =====================================================================
# WRITERS
# =====================================================================

def format_csv(df: pd.DataFrame) -> str:
    return df.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator='\n')


def write_tables(tables: Dict[str, pd.DataFrame], output: Optional[Union[str, Path]] = None,
                 stream: Optional[TextIO] = None) -> List[str]:
    """
    Write tables and return the destinations written.

    One table goes to `output` (a file) or the stream. Several tables go to
    `<output>/<name>.csv`, or to the stream each preceded by '# <name>'.
    """
    stream = stream or sys.stdout
    written: List[str] = []
    if output is None:
        for name, df in tables.items():
            if len(tables) > 1:
                stream.write(f"# {name}\n")
            stream.write(format_csv(df))
            written.append('<stdout>')
        return written

    output = Path(output)
    if len(tables) == 1 and output.suffix:
        output.parent.mkdir(parents=True, exist_ok=True)
        targets = [(output, next(iter(tables.values())))]
    else:
        output.mkdir(parents=True, exist_ok=True)
        targets = [(output / f"{name}.csv", df) for name, df in tables.items()]

    for path, df in targets:
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(format_csv(df))
        logger.info(f"  Wrote {len(df)} rows to {path}")
        written.append(str(path))
    return written


def format_summary(summary: Dict[str, Any]) -> str:
    return json.dumps(summary, indent=2) + '\n'


def write_summary(summary: Dict[str, Any], path: Optional[Union[str, Path]] = None,
                  stream: Optional[TextIO] = None) -> None:
    """JSON sidecar: a file when `path` is given, otherwise `stream` (stderr by default)."""
    text = format_summary(summary)
    if path is None:
        (stream or sys.stderr).write(text)
        return
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        f.write(text)
