import json

import pytest

from pysoil import report
from pysoil.constants import (BETA_ONE_TABLE, BETA_OVER_N_TABLE,
                              SAME_COMPONENT_TABLE, UNDEFINED_MARK)
from pysoil.cost import GateSpec, beta_one_spec, beta_over_n_spec
from pysoil.graph import parse_graph
from pysoil.tables import compute_table, compute_tables, table_spec

SOILED = ['6/7', '2/7', '5/7', '4/7', '7/7', '5/7', '2/7', '4/7']
CLEAN = ['1/7', '5/7', '2/7', '3/7', '0', '2/7', '5/7', '3/7']


def printed(table):
    return [report.table_cells(table, row)[-1] for row in table.rows]


def test_beta_one_table():
    table = compute_table(BETA_ONE_TABLE)
    assert printed(table) == ['1.2449', '0.5918', '0.8367', '0.8367', '1.3265']
    assert [row.soiled for row in table.rows] == SOILED[:5]
    assert [row.clean for row in table.rows] == CLEAN[:5]
    assert [row.expression for row in table.rows] == [
        '36/49+(1-2/7)^2', '4/49+(1-2/7)^2', '25/49+(1-3/7)^2',
        '16/49+(1-2/7)^2', '1+(1-3/7)^2']
    assert str(table.best_row().seeds) == '1,4,6'


def test_beta_over_n_table():
    table = compute_table(BETA_OVER_N_TABLE)
    assert printed(table) == ['1.2449', '0.5918', '0.7279', '0.8367', '1.2177']
    assert table.rows[2].expression == '25/49+2/3*(1-3/7)^2'
    assert table.rows[4].expression == '1+2/3*(1-3/7)^2'
    assert str(table.best_row().seeds) == '1,6'


def test_same_component_table():
    table = compute_table(SAME_COMPONENT_TABLE)
    assert table.gated
    assert [row.gate for row in table.rows] == [0, 1, 0, 0, 0, 1, 1, 1]
    assert printed(table) == ['-', '0.5918', '-', '-', '-', '1.0204', '0.8163', '0.8367']
    assert [row.soiled for row in table.rows] == SOILED
    assert [row.clean for row in table.rows] == CLEAN
    for row in table.rows:
        assert (row.expression == UNDEFINED_MARK) == (not row.score.defined)
    assert str(table.best_row().seeds) == '1,4'


def test_rows_keep_their_serial_and_seed_order():
    table = compute_table(SAME_COMPONENT_TABLE)
    assert [row.serial for row in table.rows] == list(range(1, 9))
    assert [str(row.seeds) for row in table.rows] == [
        '1,6', '3,5', '2,4,7', '2,6', '1,4,6', '1,4', '6', '2,4']


def test_tables_on_a_weighted_graph_print_decimals():
    g = parse_graph('node 1 0.5\nnode 2\nnode 3\nnode 4\nnode 5\nnode 6\nnode 7\n'
                    'edge 1 2\nedge 6 7\n')
    table = compute_table(BETA_ONE_TABLE, g)
    assert table.rows[0].soiled == repr(3.5 / 6.5)
    assert table.rows[0].value == pytest.approx((3.5 / 6.5) ** 2 + (5 / 7) ** 2)


def test_render_tables_tsv():
    text = report.render_tables(compute_tables(), 'tsv')
    blocks = text.split('\n\n')
    assert len(blocks) == 3
    first = blocks[0].splitlines()
    assert first[0] == 'Cost Function with beta=1'
    assert first[1] == 'serial\tseeds\tS\tclean\tE_expression\tE'
    assert first[2] == '1\t1,6\t6/7\t1/7\t36/49+(1-2/7)^2\t1.2449'
    assert first[-1] == 'most critical among rows: 1,4,6'
    third = blocks[2].splitlines()
    assert third[1] == 'serial\tseeds\tC1\tS\tclean\tE_expression\tE'
    assert third[2] == '1\t1,6\t0\t6/7\t1/7\t-\t-'
    assert third[-1] == 'most critical among rows: 1,4'


def test_render_tables_json():
    data = json.loads(report.render_tables(compute_tables(), 'json'))
    assert [t['name'] for t in data] == [BETA_ONE_TABLE, BETA_OVER_N_TABLE, SAME_COMPONENT_TABLE]
    assert data[0]['best'] == ['1', '4', '6']
    assert data[2]['rows'][0]['E'] is None
    assert data[2]['rows'][5]['E'] == pytest.approx(50 / 49)


def test_table_titles_and_specs():
    titles = [t.title for t in compute_tables()]
    assert titles == ['Cost Function with beta=1', 'Cost Function with beta=2/n',
                      'Cost Function together with Linguistic Constraint']
    assert table_spec(BETA_ONE_TABLE) == beta_one_spec()
    assert table_spec(BETA_OVER_N_TABLE) == beta_over_n_spec(2.0)
    assert table_spec(SAME_COMPONENT_TABLE) == beta_one_spec(gates=(GateSpec('same-component'),))
