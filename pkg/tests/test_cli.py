import json

import pytest
from util_test import fixture, run_cli

from lccc.__main__ import main

RUNNING = fixture('running.json')


def _structured(capsys, *argv):
    code, out, err = run_cli(main, [*argv, '--format', 'structured'], capsys)
    assert code == 0, err
    return json.loads(out)


def test_no_subcommand_prints_help(capsys):
    code, out, _ = run_cli(main, [], capsys)
    assert code == 2
    assert 'adjoint-check' in out


def test_pullback(capsys):
    dump = _structured(capsys, 'pullback', RUNNING, 'f', 'g')
    assert dump['command'] == 'pullback'
    assert dump['inputs']['sets']['C'] == 4
    result = dump['result']
    assert result['cardinality'] == 6
    assert result['fibered_product_sum'] == 6
    assert [row['pullback_fiber'] for row in result['fibers']] == [4, 2]
    assert result['elements'][0] == '⟨b1|c1⟩'
    assert 'note' not in result


def test_pullback_along_identity_notes_bijection(capsys):
    dump = _structured(capsys, 'pullback', RUNNING, 'f', 'idA')
    assert dump['result']['cardinality'] == 3
    assert 'bijection' in dump['result']['note']


@pytest.mark.parametrize(
    'command,f,p,sizes',
    [
        ('sigma', 'f', 'p', [3, 0]),
        ('pi', 'f', 'p', [2, 0]),
        ('pull', 'f', 'r', [1, 1, 1]),
        ('pull', 'bang', 'bang', [3, 3, 3]),
        ('pi', 'idB', 'p', [2, 1, 0]),
    ],
)
def test_family_commands(capsys, command, f, p, sizes):
    dump = _structured(capsys, command, RUNNING, f, p)
    assert dump['result']['fiber_sizes'] == sizes, f'{command} {f} {p}'
    assert dump['args'] == {'f': f, 'p': p}


def test_pi_checks_the_pullback_construction(capsys):
    dump = _structured(capsys, 'pi', RUNNING, 'f', 'p')
    assert dump['result']['agrees_with_pullback_construction'] is True
    assert dump['result']['fibers'][0]['elements'] == [
        'sec(a1){b1↦e1,b2↦e3}',
        'sec(a1){b1↦e2,b2↦e3}',
    ]


def test_pi_skips_the_pullback_construction_over_the_limit(capsys):
    dump = _structured(capsys, 'pi', RUNNING, 'f', 'p', '--limit', '5')
    assert dump['result']['fiber_sizes'] == [2, 0]
    assert dump['result']['agrees_with_pullback_construction'].startswith('skipped')


def test_exp(capsys):
    dump = _structured(capsys, 'exp', RUNNING, 'X', 'Y', '--ev')
    assert dump['result']['cardinality'] == 9
    assert len(dump['result']['ev']['table']) == 18
    dump = _structured(capsys, 'exp', RUNNING, 'Empty', 'Y')
    assert dump['result']['elements'] == ['fn{}']


def test_exp_listing_is_truncated(capsys, tmp_path):
    path = tmp_path / 'wide.json'
    path.write_text(
        json.dumps(
            {
                'sets': {
                    'X': ['x1', 'x2'],
                    'Y': [f'y{i}' for i in range(1, 12)],
                }
            }
        ),
        encoding='utf-8',
    )
    dump = _structured(capsys, 'exp', str(path), 'X', 'Y')
    elements = dump['result']['elements']
    assert dump['result']['cardinality'] == 121
    assert len(elements) == 101
    assert elements[-1] == '(+21 more)'


def test_adjoint_check_passes(capsys):
    dump = _structured(capsys, 'adjoint-check', RUNNING, 'f')
    assert dump['passed'] is True
    assert dump['summary']['failures'] == 0
    assert all(law['passed'] for law in dump['laws'])


def test_adjoint_check_slice_exp(capsys):
    dump = _structured(
        capsys, 'adjoint-check', RUNNING, 'f', '--slice-exp', '--max-total', '1'
    )
    assert dump['passed'] is True
    assert len(dump['laws']) == 2


@pytest.mark.parametrize('name', ['corrupted.json', 'corrupted_transpose.json'])
def test_adjoint_check_negative_controls(capsys, name):
    code, out, err = run_cli(
        main, ['adjoint-check', fixture(name), 'f', '--format', 'structured'], capsys
    )
    assert code == 1
    dump = json.loads(out)
    assert dump['passed'] is False
    assert dump['args']['inject'] is not None
    assert dump['summary']['failures'] > 0
    assert ' at ' in err


def test_structured_output_is_deterministic(capsys):
    argv = ['adjoint-check', RUNNING, 'f', '--format', 'structured', '--seed', '3']
    _, first, _ = run_cli(main, argv, capsys)
    _, second, _ = run_cli(main, argv, capsys)
    assert first == second
    assert json.loads(first)['seed'] == 3


def test_text_report_and_timing(capsys):
    code, out, _ = run_cli(main, ['sigma', RUNNING, 'f', 'p'], capsys)
    assert code == 0
    assert 'command: sigma' in out
    assert 'fiber_sizes: 3, 0' in out
    assert 'wall_time' not in out
    _, out, _ = run_cli(main, ['sigma', RUNNING, 'f', 'p', '--timing'], capsys)
    assert out.splitlines()[-1].startswith('wall_time: ')


def test_output_file(capsys, tmp_path):
    target = tmp_path / 'report.json'
    code, out, _ = run_cli(
        main,
        ['sigma', RUNNING, 'f', 'p', '--format', 'structured', '--output', str(target)],
        capsys,
    )
    assert code == 0
    assert out == ''
    assert json.loads(target.read_text(encoding='utf-8'))['result']['total'] == 3


def test_log_file(capsys, tmp_path):
    log = tmp_path / 'lccc.log'
    code, _, _ = run_cli(
        main,
        ['sigma', RUNNING, 'f', 'p', '--log-level', 'INFO', '--log-file', str(log)],
        capsys,
    )
    assert code == 0
    assert 'sigma finished' in log.read_text(encoding='utf-8')


@pytest.mark.parametrize(
    'argv',
    [
        ['exp', RUNNING, 'X', 'Y', '--limit', '5'],
        ['pi', RUNNING, 'f', 'p', '--limit', '1'],
    ],
)
def test_limit_exit_code(capsys, argv):
    code, out, err = run_cli(main, argv, capsys)
    assert code == 3
    assert out == ''
    assert 'over the limit of' in err


def test_limit_from_environment(capsys, monkeypatch):
    monkeypatch.setenv('LCCC_LIMIT', '5')
    code, _, _ = run_cli(main, ['exp', RUNNING, 'X', 'Y'], capsys)
    assert code == 3
    code, _, _ = run_cli(main, ['exp', RUNNING, 'X', 'Y', '--limit', '9'], capsys)
    assert code == 0
    monkeypatch.setenv('LCCC_LIMIT', 'lots')
    code, _, err = run_cli(main, ['exp', RUNNING, 'X', 'Y'], capsys)
    assert code == 2
    assert 'LCCC_LIMIT' in err


@pytest.mark.parametrize(
    'argv,message',
    [
        (['sigma', fixture('partial_map.json'), 'f', 'f'], 'maps.f.table'),
        (['sigma', fixture('malformed.json'), 'f', 'f'], 'line'),
        (['sigma', fixture('missing.json'), 'f', 'f'], 'No such file'),
        (['sigma', RUNNING, 'f', 'nosuch'], "Unknown map 'nosuch'"),
        (['sigma', RUNNING, 'f', 'r'], 'not an object of C/B'),
        (['exp', RUNNING, 'X', 'nosuch'], "Unknown set 'nosuch'"),
        (['pullback', RUNNING, 'f', 'p'], 'Not a cospan'),
        (['sigma', RUNNING, 'f', 'p', '--limit', '0'], 'positive'),
        (['pull', fixture('duplicate_entry.json'), 'f', 'f'], "Key 'b1' appears twice"),
        (['exp', fixture('duplicate_set.json'), 'A', 'A'], "Key 'A' appears twice"),
        (['adjoint-check', RUNNING, 'f', '--workers', '0'], '--workers'),
        (['adjoint-check', RUNNING, 'f', '--max-total', '-1'], '--max-total'),
    ],
)
def test_input_errors(capsys, argv, message):
    code, out, err = run_cli(main, argv, capsys)
    assert code == 2, err
    assert out == ''
    assert message in err


@pytest.mark.parametrize(
    'name,sizes',
    [('running_pi.dtt', [2, 0]), ('running_sum.dtt', [3, 0]), ('pull_bang.dtt', [2, 2, 2])],
)
def test_eval(capsys, name, sizes):
    dump = _structured(capsys, 'eval', fixture(name))
    assert dump['result']['fiber_sizes'] == sizes


def test_eval_errors_carry_file_and_position(capsys):
    path = fixture('syntax_error.dtt')
    code, _, err = run_cli(main, ['eval', path], capsys)
    assert code == 2
    assert err.startswith(f'{path}: line 2, column 13: ')


@pytest.mark.parametrize('argv', [['eval', '{path}'], ['exp', '{path}', 'A', 'A']])
def test_undecodable_file_is_an_input_error(capsys, tmp_path, argv):
    path = tmp_path / 'bad.txt'
    path.write_bytes(b'set A = {a\xff}\n')
    argv = [arg.format(path=path) for arg in argv]
    code, out, err = run_cli(main, argv, capsys)
    assert code == 2, err
    assert out == ''
    assert 'Not valid UTF-8' in err


def test_directory_is_an_input_error(capsys, tmp_path):
    code, out, err = run_cli(main, ['sigma', str(tmp_path), 'f', 'p'], capsys)
    assert code == 2, err
    assert out == ''
    assert str(tmp_path) in err


def test_pullback_of_labels_with_reserved_characters(capsys):
    dump = _structured(capsys, 'pullback', fixture('reserved_labels.json'), 's', 't')
    assert dump['result']['cardinality'] == 4
    assert '⟨a\\|b|b\\|c⟩' in dump['result']['elements']


def test_adjoint_check_reports_hom_cardinalities(capsys):
    dump = _structured(capsys, 'adjoint-check', RUNNING, 'f', '--max-total', '1')
    for law in dump['laws']:
        assert law['cardinality_count'] >= len(law['cardinalities']) > 0
        for row in law['cardinalities']:
            assert row['hom_left'] == row['hom_right'], row
