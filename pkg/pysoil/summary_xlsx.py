"""
Excel Summary Worksheets

This file contains functions for writing search results and the worked
example tables into an Excel workbook.

"""

from xlsxwriter.utility import xl_rowcol_to_cell

from pysoil import excel
from pysoil.constants import (GRAPH_TABLE, RANKED_TABLE, SEARCH_TABLE,
                              UNDEFINED_MARK)
from pysoil.graph import total_weight, weak_components
from pysoil.report import table_cells, table_columns
from pysoil.taint import critical_singletons


def create_summary(name='Summary'):
    """ Creates the basic Summary worksheet with column sizes. """
    wksheet = excel.wkbook.add_worksheet(name)
    col_sizes = {0: 30, 1: 30, 2: 10, 3: 14, 4: 14, 5: 14, 6: 14}
    for col in col_sizes:
        wksheet.set_column(col, col, col_sizes[col])
    return wksheet


""" Functions to add specific tables to the Summary worksheet """


def add_search_table(wksheet, row, col, result, spec):
    """ Adds the 'Search Summary' table (optimizer, seed, best candidate). """
    headers = ['', 'Value']
    row_labels = ['Optimizer', 'RNG seed', 'Evaluations', 'Measure', 'Best seeds', 'Best score']
    end_row = row + len(row_labels) + 2
    end_col = col + len(headers) - 1
    excel.create_table(wksheet, row, col, end_row, end_col, SEARCH_TABLE, headers, True)
    excel.add_row_labels(wksheet, SEARCH_TABLE, row_labels)

    values = [result.optimizer, result.rng_seed, result.evaluations, spec.measure_mode,
              str(result.best.seeds)]
    for label, value in zip(row_labels, values):
        wksheet.write(excel.get_table_cell(SEARCH_TABLE, 'Value', label), value,
                      excel.formats['light_bg'])
    wksheet.write_number(excel.get_table_cell(SEARCH_TABLE, 'Value', 'Best score'),
                         result.best.score.value, excel.formats['decimal_gold'])
    return end_row


def add_graph_table(wksheet, row, col, g):
    """ Adds the 'Graph Summary' table (sizes, components, critical nodes). """
    headers = ['', 'Value']
    row_labels = ['Nodes', 'Edges', 'Weak components', 'Total node weight',
                  'Critical single nodes']
    end_row = row + len(row_labels) + 2
    end_col = col + len(headers) - 1
    excel.create_table(wksheet, row, col, end_row, end_col, GRAPH_TABLE, headers, True)
    excel.add_row_labels(wksheet, GRAPH_TABLE, row_labels)

    singles = critical_singletons(g)
    values = [g.N, len(g.edges()), len(weak_components(g).components),
              total_weight(g, 'node'), ','.join(singles) if singles else UNDEFINED_MARK]
    for label, value in zip(row_labels, values):
        wksheet.write(excel.get_table_cell(GRAPH_TABLE, 'Value', label), value,
                      excel.formats['light_bg'])
    return end_row


def add_ranked_table(wksheet, row, col, result):
    """ Adds the 'Ranked Candidates' table; clean measure is a =1-S formula. """
    headers = ['Rank', 'Seeds', 'n', 'S', 'Clean', 'Gate degree', 'Score']
    end_row = row + len(result.ranked) + 2
    end_col = col + len(headers) - 1
    excel.create_table(wksheet, row, col, end_row, end_col, RANKED_TABLE, headers, False)

    first = row + 3
    s_col = excel.get_table_col(RANKED_TABLE, 'S')
    for i, candidate in enumerate(result.ranked):
        r = first + i
        sc = candidate.score
        bg = excel.row_format(r, first)
        dec = excel.row_format(r, first, 'decimal')
        wksheet.write_number(r, col, i + 1, excel.formats['header'])
        wksheet.write_string(r, col + 1, str(candidate.seeds), bg)
        wksheet.write_number(r, col + 2, sc.n, bg)
        wksheet.write_number(r, s_col, sc.S, dec)
        wksheet.write_formula(r, col + 4, '=1-' + xl_rowcol_to_cell(r, s_col), dec, 1.0 - sc.S)
        wksheet.write_number(r, col + 5, sc.gate_degree, dec)
        wksheet.write_number(r, col + 6, sc.value, excel.formats['decimal_gold'] if i == 0 else dec)
    return end_row


def write_analysis_workbook(output_file, g, result, spec):
    """ Writes the Summary worksheet of one analysis. """
    excel.create_workbook(output_file)
    wksheet = create_summary()
    end_row = add_search_table(wksheet, 0, 0, result, spec)
    end_row = add_graph_table(wksheet, end_row + 2, 0, g)
    add_ranked_table(wksheet, end_row + 2, 0, result)
    excel.close_workbook()


def add_example_table(wksheet, row, col, table):
    """ Adds one worked example table; its best defined row is highlighted. """
    headers = table_columns(table)
    end_row = row + len(table.rows) + 2
    end_col = col + len(headers) - 1
    excel.create_table(wksheet, row, col, end_row, end_col, table.title, headers, False)

    best = table.best_row()
    first = row + 3
    for i, tab_row in enumerate(table.rows):
        r = first + i
        bg = excel.formats['gold_bg'] if tab_row is best else excel.row_format(r, first)
        dec = excel.formats['decimal_gold'] if tab_row is best else excel.row_format(r, first, 'decimal')
        cells = table_cells(table, tab_row)
        for j, cell in enumerate(cells[:-1]):
            wksheet.write_string(r, col + j, cell, bg)
        if tab_row.score.defined:
            wksheet.write_number(r, end_col, tab_row.value, dec)
        else:
            wksheet.write_string(r, end_col, UNDEFINED_MARK, bg)
    return end_row


def write_tables_workbook(output_file, tables):
    """ Writes one worksheet per worked example table. """
    excel.create_workbook(output_file)
    for table in tables:
        wksheet = excel.wkbook.add_worksheet(table.name)
        wksheet.set_column(0, 0, 10)
        wksheet.set_column(1, 5, 16)
        wksheet.set_column(6, 6, 26)
        add_example_table(wksheet, 0, 0, table)
    excel.close_workbook()
