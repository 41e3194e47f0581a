"""
CLI Tests
=========
Problem configs, mode runners, CSV output and the run_riemann.py exit codes.
"""

import io
import json
import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent))
sys.path.insert(0, str(Path(__file__).parent.parent / 'scripts'))

import numpy as np
import pandas as pd
import pytest

from urhydro.cli import (
    CurveConfig,
    Mode,
    OutputGrid,
    apply_overrides,
    format_csv,
    load_problem_config,
    parse_state_flag,
    read_config_mapping,
    run,
    validate_config,
    write_tables,
)
from urhydro.errors import ConfigError, EXIT_CONFIG_ERROR, EXIT_OK, EXIT_SOLVER_FAILURE
from urhydro.riemann import solve

import run_riemann


def _snapshot_csv(cfg) -> str:
    return format_csv(run(cfg).tables['snapshot'])


# ============================================================================
# CONFIG LOADING
# ============================================================================

def test_load_shock_tube_config(config_dir):
    cfg = load_problem_config(config_dir / 'shock_tube.yml')
    assert cfg.mode is Mode.EXACT_SNAPSHOT
    assert cfg.eos.cs2 == 1.0 / 3.0
    assert cfg.left_state().vt == pytest.approx(1.0 / 3.0)
    assert cfg.right_state().rho == 20.0
    assert cfg.grid.n_points == 2001


def test_all_shipped_configs_validate(config_dir):
    for name in ('wave_curves', 'intersection', 'shock_tube',
                 'godunov_shock_tube', 'convergence', 'trivial'):
        load_problem_config(config_dir / f'{name}.yml')


def test_cfl_above_one_rejected(config_dir):
    base = read_config_mapping(config_dir / 'trivial.yml')
    with pytest.raises(ConfigError) as exc_info:
        apply_overrides(base, {'cfl': 2.0})
    assert 'scheme.cfl' in str(exc_info.value)


def test_missing_state_rejected():
    with pytest.raises(ConfigError) as exc_info:
        validate_config({'cs2': '1/3', 'right': {'rho': 1.0, 'vx': 0.0}})
    assert 'left' in str(exc_info.value)


@pytest.mark.parametrize("data", [
    {'cs2': '3/2', 'left': {'rho': 1.0, 'vx': 0.0}, 'right': {'rho': 1.0, 'vx': 0.0}},
    {'cs2': '1/3', 'left': {'rho': 1.0, 'vx': 0.8, 'vt': 0.7}, 'right': {'rho': 1.0, 'vx': 0.0}},
    {'cs2': '1/3', 'left': {'rho': -1.0, 'vx': 0.0}, 'right': {'rho': 1.0, 'vx': 0.0}},
    {'cs2': '1/3', 'mode': 'hllc', 'left': {'rho': 1.0, 'vx': 0.0}, 'right': {'rho': 1.0, 'vx': 0.0}},
    {'cs2': '1/3', 'left': {'rho': 1.0, 'vx': 0.0}, 'right': {'rho': 1.0, 'vx': 0.0},
     'scheme': {'resolutions': [200, 100]}},
])
def test_invalid_configs(data):
    with pytest.raises(ConfigError):
        validate_config(data)


def test_yaml_error_reports_line(tmp_path):
    path = tmp_path / 'broken.yml'
    path.write_text("cs2: '1/3'\nleft: {rho: 1.0, vx: 0.0\nright: {rho: 1.0, vx: 0.0}\n", encoding='utf-8')
    with pytest.raises(ConfigError) as exc_info:
        read_config_mapping(path)
    assert 'line' in str(exc_info.value)


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        read_config_mapping(tmp_path / 'absent.yml')


def test_json_config(tmp_path):
    path = tmp_path / 'problem.json'
    path.write_text(json.dumps({
        'cs2': '1/4', 'left': {'rho': 2.0, 'vx': 0.1}, 'right': {'rho': 1.0, 'vx': 0.0}
    }), encoding='utf-8')
    cfg = load_problem_config(path)
    assert cfg.eos.cs2 == 0.25


def test_parse_state_flag():
    assert parse_state_flag("1,0.5,0.3") == {'rho': 1.0, 'vx': 0.5, 'vt': 0.3}
    assert parse_state_flag("2, -0.1") == {'rho': 2.0, 'vx': -0.1}
    with pytest.raises(ConfigError):
        parse_state_flag("1")
    with pytest.raises(ConfigError):
        parse_state_flag("a,b")


def test_flag_overrides_replace_config(config_dir):
    base = read_config_mapping(config_dir / 'shock_tube.yml')
    cfg = apply_overrides(base, {'left': '2,0,0', 'n_points': 5, 't': 0.5, 'mode': None})
    assert cfg.left.rho == 2.0
    assert cfg.grid.n_points == 5
    assert cfg.t == 0.5
    assert cfg.mode is Mode.EXACT_SNAPSHOT


# ============================================================================
# OUTPUT GRID
# ============================================================================

def test_points_are_antisymmetric():
    points = OutputGrid(x_min=-1.0, x_max=1.0, n_points=2001).points()
    assert len(points) == 2001
    assert points[0] == -1.0 and points[-1] == 1.0
    assert all(points[i] == -points[-1 - i] for i in range(len(points)))


def test_single_point_grid():
    assert OutputGrid(x_min=0.25, x_max=0.25, n_points=1).points() == [0.25]


# ============================================================================
# EXACT SNAPSHOT
# ============================================================================

def test_trivial_snapshot(config_dir):
    cfg = load_problem_config(config_dir / 'trivial.yml')
    out = run(cfg)
    text = format_csv(out.tables['snapshot'])
    lines = text.splitlines()
    assert lines[0] == "x,xi,rho,p,vx,vt,W"
    assert len(lines) == 12
    df = out.tables['snapshot']
    assert (df['rho'] == 1.0).all()
    assert (df['vx'] == 0.0).all()
    assert out.summary['pattern'] == "NN"


def test_snapshot_is_deterministic(config_dir):
    base = read_config_mapping(config_dir / 'shock_tube.yml')
    cfg = apply_overrides(base, {'n_points': 201})
    assert _snapshot_csv(cfg) == _snapshot_csv(cfg)


def test_mirrored_snapshot(config_dir):
    """Reflecting the problem reverses the rows and negates x and vx."""
    base = read_config_mapping(config_dir / 'shock_tube.yml')
    cfg = apply_overrides(base, {'n_points': 201})
    mirrored = apply_overrides(base, {
        'n_points': 201,
        'left': f"{cfg.right.rho},{-cfg.right.vx},{cfg.right.vt}",
        'right': f"{cfg.left.rho},{-cfg.left.vx},{cfg.left.vt}",
    })
    a = run(cfg).tables['snapshot']
    b = run(mirrored).tables['snapshot'].iloc[::-1].reset_index(drop=True)
    assert np.array_equal(a['x'].to_numpy(), -b['x'].to_numpy())
    assert np.allclose(a['rho'], b['rho'], rtol=1e-9, atol=1e-12)
    assert np.allclose(a['vx'], -b['vx'], rtol=1e-9, atol=1e-12)
    assert np.allclose(a['vt'], b['vt'], rtol=1e-9, atol=1e-12)


def test_snapshot_summary_schema(config_dir):
    out = run(load_problem_config(config_dir / 'shock_tube.yml'))
    summary = out.summary
    assert summary['pattern'] == "SR"
    assert set(summary['star']) == {'vx', 'rho', 'vtL', 'vtR'}
    assert summary['waves']['left']['type'] == 'shock'
    assert len(summary['waves']['right']['speeds']) == 2
    json.dumps(summary)


# ============================================================================
# WAVE CURVES
# ============================================================================

def test_wave_curve_tables(config_dir):
    out = run(load_problem_config(config_dir / 'wave_curves.yml'))
    assert len(out.tables) == 8
    table = out.tables['vt_0.8_right']
    assert list(table.columns) == ['vx', 'rho', 'branch']
    assert len(table) == 399
    assert set(table['branch']) <= {'rarefaction', 'shock', 'vacuum'}
    assert 'vacuum' in set(out.tables['vt_0.865_right']['branch'])


def test_intersection_from_tables(config_dir):
    """The crossing of the two tabulated curves lands on the solver's star state."""
    cfg = load_problem_config(config_dir / 'intersection.yml')
    out = run(cfg)
    left = out.tables['left_left']
    right = out.tables['right_right']
    assert np.array_equal(left['vx'].to_numpy(), right['vx'].to_numpy())

    diff = left['rho'].to_numpy() - right['rho'].to_numpy()
    vx = left['vx'].to_numpy()
    i = int(np.flatnonzero((diff[:-1] > 0.0) & (diff[1:] <= 0.0))[0])
    crossing = vx[i] + (vx[i + 1] - vx[i]) * diff[i] / (diff[i] - diff[i + 1])

    sol = solve(cfg.left_state(), cfg.right_state(), cfg.eos)
    assert out.summary['intersection'] == {'vx': sol.star_vx, 'rho': sol.star_rho}
    assert out.summary['pattern'] == "RS"
    assert crossing == pytest.approx(sol.star_vx, abs=1e-3)


def test_single_point_curve():
    """One grid point gives one row at the ahead state, whatever the vx range."""
    cfg = validate_config({
        'mode': 'wave-curves',
        'left': {'rho': 1.0, 'vx': 0.0}, 'right': {'rho': 1.0, 'vx': 0.0},
        'curves': [{'name': 'one', 'ahead': {'rho': 2.0, 'vx': 0.3, 'vt': 0.4},
                    'families': ['left', 'right'], 'n_points': 1}],
    })
    out = run(cfg)
    # vx == ahead.vx belongs to the shock branch of W-> and the fan branch of W<-
    for family, branch in (('left', 'rarefaction'), ('right', 'shock')):
        table = out.tables[f'one_{family}']
        assert len(table) == 1
        assert table['vx'][0] == 0.3
        assert table['rho'][0] == 2.0
        assert table['branch'][0] == branch


# ============================================================================
# GODUNOV AND CONVERGENCE
# ============================================================================

def test_godunov_trivial(config_dir):
    base = read_config_mapping(config_dir / 'trivial.yml')
    out = run(apply_overrides(base, {'mode': 'godunov'}))
    table = out.tables['godunov']
    assert len(table) == 20
    for col in ('err_rho', 'err_vx', 'err_vt'):
        assert table[col].abs().max() < 1e-14
    assert out.summary['pattern'] == "NN"
    assert out.summary['time'] == pytest.approx(0.2)


def test_convergence_trivial(config_dir):
    base = read_config_mapping(config_dir / 'trivial.yml')
    out = run(apply_overrides(base, {'mode': 'convergence'}))
    table = out.tables['convergence']
    assert list(table.columns) == ['n', 'L1_rho', 'L1_vx', 'L1_vt', 'ratio']
    assert table['n'].tolist() == [10, 20, 40]
    assert (table['L1_rho'] < 1e-14).all()


# ============================================================================
# OVERLAY AND WRITERS
# ============================================================================

def test_overlay_of_own_snapshot_is_zero(config_dir, tmp_path):
    base = read_config_mapping(config_dir / 'shock_tube.yml')
    cfg = apply_overrides(base, {'n_points': 101})
    profile = tmp_path / 'profile.csv'
    profile.write_text(_snapshot_csv(cfg), encoding='utf-8')

    out = run(cfg, profile)
    assert list(out.tables) == ['overlay_diff']
    assert all(v == 0.0 for v in out.summary['max_abs_diff'].values())


def test_overlay_needs_snapshot_mode(config_dir, tmp_path):
    cfg = load_problem_config(config_dir / 'intersection.yml')
    with pytest.raises(ConfigError):
        run(cfg, tmp_path / 'profile.csv')


def test_write_tables_to_stream_and_directory(tmp_path):
    tables = {
        'a': pd.DataFrame({'x': [0.1, 0.2]}),
        'b': pd.DataFrame({'x': [1.0 / 3.0]}),
    }
    stream = io.StringIO()
    write_tables(tables, stream=stream)
    assert stream.getvalue() == "# a\nx\n0.10000000000000001\n0.20000000000000001\n# b\nx\n0.33333333333333331\n"

    written = write_tables(tables, tmp_path / 'out')
    assert sorted(Path(p).name for p in written) == ['a.csv', 'b.csv']

    single = write_tables({'a': tables['a']}, tmp_path / 'single.csv')
    assert single == [str(tmp_path / 'single.csv')]


# ============================================================================
# SCRIPT ENTRY POINT
# ============================================================================

def test_main_success(config_dir, tmp_path):
    out_csv = tmp_path / 'snapshot.csv'
    summary = tmp_path / 'summary.json'
    code = run_riemann.main([
        '--config', str(config_dir / 'trivial.yml'),
        '-o', str(out_csv), '--summary', str(summary),
        '--quiet', '--log-level', 'ERROR',
    ])
    assert code == EXIT_OK
    assert out_csv.read_text(encoding='utf-8').startswith("x,xi,rho,p,vx,vt,W\n")
    assert json.loads(summary.read_text(encoding='utf-8'))['pattern'] == "NN"


def test_main_config_error(config_dir):
    code = run_riemann.main([
        '--config', str(config_dir / 'trivial.yml'), '--cfl', '2', '--quiet', '--log-level', 'ERROR',
    ])
    assert code == EXIT_CONFIG_ERROR


def test_main_solver_failure(tmp_path):
    code = run_riemann.main([
        '--cs2', '1/3', '--left', '1,-0.7,0.7', '--right', '1,0.7,0.7',
        '-o', str(tmp_path / 'out.csv'), '--quiet', '--log-level', 'ERROR',
    ])
    assert code == EXIT_SOLVER_FAILURE
