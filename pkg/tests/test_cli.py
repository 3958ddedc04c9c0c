import io
import json

import pytest

from scgraph.cli import RunConfig, build_parser, run
from scgraph.config import Guards
from scgraph.errors import ConfigError
from scgraph.graph6 import parse_graph6
from scgraph.partitions import SkewPartition, SymmetricPartition, verify_skew_partition, verify_symmetric_partition


def _run(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err


def test_enum(capsys):
    code, lines, err = _run(capsys, 'enum', '--n', '5')
    assert code == 0
    assert len(lines) == 2
    assert lines == sorted(lines)
    assert "2 graphs" in err


def test_enum_quiet_and_empty(capsys):
    code, lines, err = _run(capsys, '--quiet', 'enum', '--n', '6')
    assert code == 0
    assert lines == []
    assert err == ''


def test_antimorphism(capsys):
    assert _run(capsys, 'antimorphism', 'Ch')[:2] == (0, ['(0 1 3 2)'])
    assert _run(capsys, 'antimorphism', '--pow2', 'Ch')[:2] == (0, ['(0 1 3 2)'])
    paw = 'Cx'
    assert _run(capsys, 'antimorphism', paw)[:2] == (1, ['none'])
    assert _run(capsys, 'antimorphism', '--pow2', paw)[:2] == (1, ['none'])


def test_p4_partition(capsys):
    code, lines, _ = _run(capsys, 'p4-partition', 'Ch')
    assert code == 0
    assert lines == ['0-1-2-3', '{"quads": [[0, 1, 2, 3]], "leftover": null}']


def test_detect(capsys):
    assert _run(capsys, 'detect', '--c5', 'DjC')[:2] == (1, ['none'])
    assert _run(capsys, 'detect', '--c5', 'Dhc')[:2] == (0, ['[0, 1, 2, 3, 4]'])
    code, lines, _ = _run(capsys, 'detect', '--skew', 'DjC')
    assert code == 0
    w = SkewPartition.from_parts(*json.loads(lines[0]).values())
    assert verify_skew_partition(parse_graph6('DjC'), w)
    code, lines, _ = _run(capsys, 'detect', '--symmetric', 'Ch')
    assert code == 0
    assert verify_symmetric_partition(parse_graph6('Ch'), SymmetricPartition.from_parts(*json.loads(lines[0]).values()))
    assert _run(capsys, 'detect', '--symmetric', 'Dhc')[:2] == (1, ['none'])


def test_detect_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr('sys.stdin', io.StringIO('Ch\nDhc\n\nDjC\n'))
    code, lines, _ = _run(capsys, 'detect', '--c5', '-')
    assert code == 1
    assert lines == ['none', '[0, 1, 2, 3, 4]', 'none']


def test_theorem_m(capsys):
    code, lines, _ = _run(capsys, 'theorem-m', 'Dhc')
    assert code == 0
    data = json.loads(lines[0])
    assert (data["case"], data["kind"], data["witness"]) == (0, 'c5', [0, 1, 2, 3, 4])
    code, lines, _ = _run(capsys, 'theorem-m', 'DjC')
    assert json.loads(lines[0])["kind"] == 'skew'
    assert _run(capsys, 'theorem-m', 'Ch')[:2] == (1, ['none'])


def test_construct(capsys):
    assert _run(capsys, 'construct', '--p4', '@')[:2] == (0, ['Ch'])
    assert _run(capsys, 'construct', '--join', '@', '@')[:2] == (0, ['Ch'])
    code, lines, _ = _run(capsys, 'construct', '--p4', 'Ch')
    assert parse_graph6(lines[0]).n == 16


def test_akiyama_harary(capsys):
    code, lines, _ = _run(capsys, 'akiyama-harary', 'DjC')
    assert code == 0
    assert json.loads(lines[0]) == {
        "end_vertices": [0, 4],
        "cut_vertices": [1, 3],
        "skew": {"A": [0], "B": [4], "C": [1, 3], "D": [2]},
    }
    code, _, err = _run(capsys, 'akiyama-harary', 'Dhc')
    assert code == 2 and 'error:' in err


def test_two_join(capsys):
    code, lines, _ = _run(capsys, 'two-join', 'Ch')
    assert code == 0
    data = json.loads(lines[0])
    assert data["X1"] == [0, 3] and data["X2"] == [1, 2]
    assert data["conditions_hold"] is True
    assert data["paths_long_enough"] is False
    assert _run(capsys, 'two-join', 'Dhc')[:2] == (1, ['none'])


def test_conjecture_sweep(capsys):
    code, lines, _ = _run(capsys, '--quiet', 'conjecture', '--n', '8')
    assert code == 0
    reports = [json.loads(line) for line in lines[:10]]
    assert all(r["conjecture_holds"] for r in reports)
    assert all(r["n"] == 8 for r in reports)
    assert lines[-1] == 'graphs=10 holds=10 counterexamples=0'
    assert not any(line.startswith('COUNTEREXAMPLE') for line in lines)


def test_conjecture_output_is_independent_of_jobs(capsys):
    _, single, _ = _run(capsys, '--quiet', 'conjecture', '--n', '8')
    _, parallel, _ = _run(capsys, '--quiet', 'conjecture', '--n', '8', '--jobs', '2')
    assert single == parallel


def test_conjecture_writes_files(capsys, tmp_path):
    out = tmp_path / 'reports.jsonl'
    csv = tmp_path / 'summary.csv'
    code, lines, _ = _run(capsys, 'conjecture', '--n', '5', '--out', str(out), '--summary-csv', str(csv))
    assert code == 0
    assert len(out.read_text(encoding='utf-8').splitlines()) == 2
    assert csv.read_text(encoding='utf-8').splitlines()[0].startswith('n,graphs,')
    assert lines[-1] == 'graphs=2 holds=2 counterexamples=0'


@pytest.mark.parametrize('argv', [
    ['detect', '--c5', 'C h'],
    ['p4-partition', 'Cx'],
    ['enum', '--n', '5', '--jobs', '0'],
    ['enum', '--n', '14'],
    ['enum', '--n', '-1'],
    ['conjecture', '--n', '-3'],
    ['frobnicate'],
    ['detect', 'Ch'],
    [],
])
def test_input_errors_exit_2(capsys, argv):
    code, lines, err = _run(capsys, *argv)
    assert code == 2
    assert lines == []
    assert 'error:' in err


def test_environment_guards(capsys, monkeypatch):
    monkeypatch.setenv('SCGRAPH_ENUM_MAX_N', '4')
    assert _run(capsys, 'enum', '--n', '5')[0] == 2
    monkeypatch.setenv('SCGRAPH_MAX_N', '4')
    assert _run(capsys, 'detect', '--skew', 'DjC')[0] == 2
    monkeypatch.setenv('SCGRAPH_MAX_N', 'lots')
    code, _, err = _run(capsys, 'detect', '--skew', 'Ch')
    assert code == 2 and 'SCGRAPH_MAX_N' in err


def test_run_config_rejects_zero_jobs():
    with pytest.raises(ConfigError):
        RunConfig('enum', Guards(), jobs=0)


def test_parser_lists_every_command():
    help_text = build_parser().format_help()
    for command in ('enum', 'antimorphism', 'p4-partition', 'detect', 'theorem-m', 'conjecture',
                    'construct', 'akiyama-harary', 'two-join'):
        assert command in help_text
