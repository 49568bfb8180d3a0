"""
Spreadsheet helpers shared by the workbook writers.

One workbook is open at a time. Every table written into it is registered
under its title so that writers can address cells by column header and row
label instead of by coordinates.

"""

from dataclasses import dataclass, field
from typing import Dict, Tuple

import xlsxwriter
from xlsxwriter.utility import xl_rowcol_to_cell

from pysoil.constants import XLS_FORMATS


@dataclass
class TableLayout:
    """
    Placement of one table.

    bounds      (first row, first col, last row, last col)
    columns     column header -> column number
    cells       (column header, row label) -> cell name, e.g. 'B4'
    """
    bounds: Tuple[int, int, int, int]
    columns: Dict[str, int] = field(default_factory=dict)
    cells: Dict[Tuple[str, str], str] = field(default_factory=dict)


# Key: table title
layouts: Dict[str, TableLayout] = {}

wkbook = None
formats = {}


def create_workbook(name):
    """ Opens a new workbook and registers its cell formats. """
    global wkbook
    wkbook = xlsxwriter.Workbook(name)
    layouts.clear()
    formats.clear()
    for fmt_name, opts in XLS_FORMATS.items():
        formats[fmt_name] = wkbook.add_format(opts)
    return wkbook


def close_workbook():
    global wkbook
    wkbook.close()
    wkbook = None


def row_format(r, first_row, kind='bg'):
    """ Alternating light/dark shading of data rows. """
    shade = 'light' if (r - first_row) % 2 == 0 else 'dark'
    if kind == 'decimal':
        return formats['decimal_' + shade]
    return formats[shade + '_bg']


def create_table(wksheet, row, col, end_row, end_col, title, headers, shade_body):
    """
    Writes a titled table frame and registers its layout.

    The title goes in the top-left cell, the headers two rows below it, and
    data rows start right under the headers. With shade_body the value cells
    are pre-filled with the light background.
    """
    layout = TableLayout((row, col, end_row, end_col))
    layout.columns = {header: col + offset for offset, header in enumerate(headers)}
    layouts[title] = layout

    wksheet.write_string(row, col, title, formats['title'])
    if shade_body:
        for r in range(row + 2, end_row + 1):
            for c in range(col + 1, end_col + 1):
                wksheet.write_blank(r, c, None, formats['light_bg'])
    for header, c in layout.columns.items():
        wksheet.write_string(row + 2, c, header, formats['header'])


def add_row_labels(wksheet, title, labels):
    """ Writes row labels down the first column and maps their cells. """
    layout = layouts[title]
    (first_row, first_col, _, _) = layout.bounds
    for offset, label in enumerate(labels):
        r = first_row + 3 + offset
        wksheet.write_string(r, first_col, label, formats['header'])
        for header, c in layout.columns.items():
            layout.cells[(header, label)] = xl_rowcol_to_cell(r, c)


def get_table_col(title, header):
    return layouts[title].columns[header]


def get_table_cell(title, col_header, row_label):
    return layouts[title].cells[(col_header, row_label)]
