"""Test the command line: check, run, exit codes and artifacts."""
import json
from pathlib import Path

import numpy as np
import pytest

from convexshape import driver
from convexshape.entry_points import main

CONFIGS = Path(__file__).parent.parent / 'configs'


def _write(tmp_path, text):
    path = tmp_path / 'run.yaml'
    path.write_text(text)
    return str(path)


def test_check_shipped_config():
    assert main(['check', str(CONFIGS / 'example1.yaml')]) == 0


@pytest.mark.parametrize('text', [
    'problem: custom\ncustom: {f: "1", j: "u"}\nsurprise: 1\n',
    'problem: custom\ncustom: {f: "sin(", j: "u"}\n',
    'problem: custom\ncustom: {f: "1", j: "u + w"}\n',
])
def test_check_rejects_bad_config(tmp_path, text):
    assert main(['check', _write(tmp_path, text)]) == 1


def test_missing_config(tmp_path):
    assert main(['check', str(tmp_path / 'nowhere.yaml')]) == 1
    assert main(['run', str(tmp_path / 'nowhere.yaml')]) == 1


def test_bad_level_override(tmp_path):
    path = _write(tmp_path, 'problem: custom\ncustom: {f: "1", j: "u"}\n')
    assert main(['run', path, '--levels', '0']) == 1


def test_small_run(tmp_path):
    path = _write(tmp_path, 'problem: custom\ncustom: {f: "1 + x1", j: "u"}\nmesh: {level: 0}\ncycles: 3\n'
                            'algorithm: {max_outer: 2}\n')
    out = tmp_path / 'out'
    status = main(['run', path, '--out', str(out), '--levels', '2', '--seed', '5'])
    assert status in (0, 2)

    summary = json.loads((out / 'summary.json').read_text())
    assert summary['seed'] == 5
    assert summary['problem'] == 'custom'
    assert summary['failed'] == (status == 2)
    assert (out / 'level_0.vtk').exists()
    assert (out / 'level_0_trace.csv').exists()
    if status == 0:
        assert [level['level'] for level in summary['levels']] == [0, 1]
        assert (out / 'level_1.svg').exists()
        assert summary['levels'][1]['num_cells'] == 4 * summary['levels'][0]['num_cells']
        assert not (out / 'FAILED').exists()
    else:
        assert (out / 'FAILED').exists()


@pytest.mark.parametrize('error', [RuntimeError('Factor is exactly singular'), np.linalg.LinAlgError('Singular matrix')],
                         ids=['runtime', 'linalg'])
def test_numerical_failure_marks_level(tmp_path, monkeypatch, error):
    def broken(*args, **kwargs):
        raise error

    monkeypatch.setattr(driver, 'run', broken)
    path = _write(tmp_path, 'problem: custom\ncustom: {f: "1", j: "u"}\nmesh: {level: 0}\ncycles: 2\n')
    out = tmp_path / 'out'
    assert main(['run', path, '--out', str(out)]) == 2

    marker = (out / 'FAILED').read_text()
    assert marker.startswith(f'level 0: {type(error).__name__}: ')
    summary = json.loads((out / 'summary.json').read_text())
    assert summary['failed'] is True
    assert len(summary['levels']) == 1
    assert str(error) in summary['levels'][0]['error']
