"""
Text Reports

Renders search results and worked example tables as TSV or JSON. Numbers are
printed with 4 decimals; JSON carries full precision.

"""

import json

from pysoil.constants import DECIMALS, UNDEFINED_MARK

RANKED_COLUMNS = ['rank', 'seeds', 'n', 'S', 'clean', 'gate_degree', 'score']


def fmt(x):
    """ Fixed 4-decimal display (round-half-even on the binary value). """
    return '{:.{}f}'.format(x, DECIMALS)


def render_result_tsv(result):
    lines = ['# optimizer=' + result.optimizer + ' rng_seed=' + str(result.rng_seed)
             + ' evaluations=' + str(result.evaluations),
             '\t'.join(RANKED_COLUMNS)]
    for rank, candidate in enumerate(result.ranked, start=1):
        sc = candidate.score
        lines.append('\t'.join([str(rank), str(candidate.seeds), str(sc.n), fmt(sc.S),
                                fmt(1.0 - sc.S), fmt(sc.gate_degree), fmt(sc.value)]))
    return '\n'.join(lines) + '\n'


def render_result_json(result):
    return json.dumps(result.to_dict(), indent=2) + '\n'


def render_result(result, output_format):
    if output_format == 'json':
        return render_result_json(result)
    return render_result_tsv(result)


def table_columns(table):
    columns = ['serial', 'seeds']
    if table.gated:
        columns.append('C1')
    return columns + ['S', 'clean', 'E_expression', 'E']


def table_cells(table, row):
    """ Printed cells of one table row; undefined costs print '-'. """
    cells = [str(row.serial), str(row.seeds)]
    if table.gated:
        cells.append(str(row.gate))
    value = fmt(row.value) if row.score.defined else UNDEFINED_MARK
    return cells + [row.soiled, row.clean, row.expression, value]


def render_tables_tsv(tables):
    blocks = []
    for table in tables:
        lines = [table.title, '\t'.join(table_columns(table))]
        for row in table.rows:
            lines.append('\t'.join(table_cells(table, row)))
        best = table.best_row()
        lines.append('most critical among rows: ' + (str(best.seeds) if best else UNDEFINED_MARK))
        blocks.append('\n'.join(lines) + '\n')
    return '\n'.join(blocks)


def tables_to_dict(tables):
    out = []
    for table in tables:
        best = table.best_row()
        out.append({'name': table.name,
                    'title': table.title,
                    'rows': [{'serial': row.serial,
                              'seeds': list(row.seeds.sorted_ids()),
                              'C1': row.gate,
                              'S': row.score.S,
                              'soiled': row.soiled,
                              'clean': row.clean,
                              'expression': row.expression,
                              'E': row.value} for row in table.rows],
                    'best': list(best.seeds.sorted_ids()) if best else None})
    return out


def render_tables(tables, output_format):
    if output_format == 'json':
        return json.dumps(tables_to_dict(tables), indent=2) + '\n'
    return render_tables_tsv(tables)
