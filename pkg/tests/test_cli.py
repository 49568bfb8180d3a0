import json

import pytest

from pysoil.cost import beta_one_spec
from pysoil.graph import sample_graph
from pysoil.main import main
from pysoil.optimize import exhaustive_search


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_sample_graph(capsys):
    code, out, err = run(capsys, 'analyze')
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == '# optimizer=exhaustive rng_seed=0 evaluations=127'
    assert lines[1] == 'rank\tseeds\tn\tS\tclean\tgate_degree\tscore'
    assert lines[2] == '1\t1,4,6\t3\t1.0000\t0.0000\t1.0000\t1.3265'
    assert len(lines) == 2 + 10


def test_analyze_beta_over_n_and_gate(capsys):
    assert run(capsys, 'analyze', '--beta-over-n', '2')[1].splitlines()[2].split('\t')[1] == '1'
    code, out, _ = run(capsys, 'analyze', '--gate', 'same-component', '--top', '3')
    assert code == 0
    assert out.splitlines()[2] == '1\t1\t1\t0.5714\t0.4286\t1.0000\t1.0612'
    assert len(out.splitlines()) == 5


def test_analyze_json_matches_library(capsys):
    code, out, _ = run(capsys, 'analyze', '--format', 'json')
    assert code == 0
    expected = exhaustive_search(sample_graph(), beta_one_spec()).to_dict()
    assert json.loads(out) == expected


@pytest.mark.parametrize('optimizer', ['sa', 'ga'])
def test_repeat_runs_are_byte_identical(capsys, optimizer):
    argv = ['analyze', '--optimizer', optimizer, '--rng-seed', '42']
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first[0] == 0
    assert first[1] == second[1]


def test_single_node_graph(capsys, tmp_path):
    path = tmp_path / 'one.graph'
    path.write_text('node z\n')
    code, out, err = run(capsys, 'analyze', '--graph', str(path))
    assert code == 0
    assert out.splitlines()[2] == '1\tz\t1\t1.0000\t0.0000\t1.0000\t1.0000'
    assert 'z' in err


def test_edge_measure_of_edgeless_graph_fails(capsys, tmp_path):
    path = tmp_path / 'one.graph'
    path.write_text('node z\n')
    code, out, err = run(capsys, 'analyze', '--graph', str(path), '--measure', 'edge')
    assert code == 1
    assert out == ''
    assert err.startswith('Error: ')


def test_unknown_constraint_exits_1(capsys):
    code, out, err = run(capsys, 'analyze', '--gate', 'connected')
    assert code == 1
    assert out == ''
    assert 'connected' in err


def test_infeasible_gates_exit_2(capsys):
    code, out, err = run(capsys, 'analyze', '--gate', 'require:1', '--gate', 'forbid:1')
    assert code == 2
    assert out == ''
    assert 'Error:' in err


def test_malformed_graph_names_the_line(capsys, tmp_path):
    path = tmp_path / 'bad.graph'
    path.write_text('node a\nnode b\nedge a c\n')
    code, _, err = run(capsys, 'analyze', '--graph', str(path))
    assert code == 1
    assert 'line 3' in err


def test_missing_file_exits_1(capsys, tmp_path):
    code, _, err = run(capsys, 'analyze', '--graph', str(tmp_path / 'absent.graph'))
    assert code == 1
    assert 'Error:' in err


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as info:
        main(['analyze', '--optimizer', 'tabu'])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(['analyze', '--beta-const', '1', '--beta-over-n', '2'])
    assert info.value.code == 1


def test_penalty_flag(capsys):
    code, out, _ = run(capsys, 'analyze', '--penalty', 'cardinality:1:1:0.5', '--top', '1')
    assert code == 0
    # {1} scores 52/49 plus the full penalty bonus
    assert out.splitlines()[2] == '1\t1\t1\t0.5714\t0.4286\t1.0000\t1.5612'


def test_bad_penalty_flag(capsys):
    assert run(capsys, 'analyze', '--penalty', 'same-component')[0] == 1
    assert run(capsys, 'analyze', '--penalty', 'same-component:lots')[0] == 1


def test_gen_log_ingest_analyze(capsys, tmp_path):
    log = tmp_path / 'log.csv'
    graph = tmp_path / 'db.graph'
    assert run(capsys, 'gen-log', '--nodes', '6', '--transactions', '200',
               '--rng-seed', '3', '-o', str(log))[0] == 0
    assert log.read_text().startswith('src,dst,count\n')
    code, _, err = run(capsys, 'ingest', str(log), '-o', str(graph))
    assert code == 0
    assert '6 nodes' in err
    from_graph = run(capsys, 'analyze', '--graph', str(graph), '--measure', 'edge')
    from_log = run(capsys, 'analyze', '--log', str(log), '--measure', 'edge')
    assert from_graph[0] == 0
    assert from_graph[1] == from_log[1]


def test_gen_log_is_seeded(capsys, tmp_path):
    first, second = tmp_path / 'a.csv', tmp_path / 'b.csv'
    run(capsys, 'gen-log', '--rng-seed', '9', '-o', str(first))
    run(capsys, 'gen-log', '--rng-seed', '9', '-o', str(second))
    assert first.read_bytes() == second.read_bytes()


def test_empty_log_exits_1(capsys, tmp_path):
    log = tmp_path / 'empty.csv'
    log.write_text('src,dst,count\n')
    code, _, err = run(capsys, 'ingest', str(log), '-o', str(tmp_path / 'g.graph'))
    assert code == 1
    assert 'empty' in err


def test_configure_then_analyze(capsys, tmp_path):
    cfg = tmp_path / 'cost.cfg'
    assert run(capsys, 'configure', str(cfg))[0] == 0
    code, out, _ = run(capsys, 'analyze', '--cost', str(cfg))
    assert code == 0
    assert out.splitlines()[2].split('\t')[1] == '1,4,6'


def test_config_file_wins_over_flags(capsys, tmp_path):
    cfg = tmp_path / 'cost.cfg'
    cfg.write_text('beta = inv 2\n')
    code, out, err = run(capsys, 'analyze', '--cost', str(cfg), '--beta-const', '1')
    assert code == 0
    assert out.splitlines()[2].split('\t')[1] == '1'
    assert 'Warning' in err


def test_tables_command(capsys):
    code, out, _ = run(capsys, 'tables')
    assert code == 0
    assert 'most critical among rows: 1,4,6' in out
    assert 'most critical among rows: 1,6' in out
    assert 'most critical among rows: 1,4' in out


def test_xlsx_outputs(capsys, tmp_path):
    analysis = tmp_path / 'analysis.xlsx'
    tables = tmp_path / 'tables.xlsx'
    assert run(capsys, 'analyze', '--xlsx', str(analysis))[0] == 0
    assert run(capsys, 'tables', '--xlsx', str(tables))[0] == 0
    assert analysis.stat().st_size > 0
    assert tables.stat().st_size > 0


@pytest.mark.parametrize('argv, name, content', [
    (['analyze', '--graph', '{path}'], 'bad.graph', b'node a\nnode \xff\n'),
    (['ingest', '{path}', '-o', '{out}'], 'bad.csv', b'a,\xffb\n'),
    (['analyze', '--cost', '{path}'], 'bad.cfg', b'beta = const \xff1\n'),
])
def test_invalid_utf8_input_exits_1(capsys, tmp_path, argv, name, content):
    path = tmp_path / name
    path.write_bytes(content)
    argv = [a.format(path=path, out=tmp_path / 'out.graph') for a in argv]
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ''
    assert 'UTF-8' in err
    assert 'line ' in err
