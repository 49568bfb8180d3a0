"""
Program Constants

This file defines all of the constant variables used throughout the program:
search defaults, the embedded sample graph with the seed sets of its worked
example tables, and the spreadsheet cell formats.

"""
MEASURE_MODES = ['node', 'edge']
DEFAULT_MEASURE = 'node'

OPTIMIZERS = ['exhaustive', 'sa', 'ga']
OUTPUT_FORMATS = ['tsv', 'json']

# Exhaustive search refuses graphs above this many nodes (2^22 - 1 subsets)
ENUMERATION_CAP = 22

DEFAULT_TOP_K = 10
DEFAULT_RNG_SEED = 0
DEFAULT_WORKERS = 1

# Numeric display (4 decimals, same as the worked example tables)
DECIMALS = 4

""" Simulated Annealing Defaults """
SA_INITIAL_TEMPERATURE = 1.0
SA_COOLING_FACTOR = 0.95
SA_STEPS_PER_TEMPERATURE = 50
SA_MINIMUM_TEMPERATURE = 1e-4
SA_RESTARTS = 10
# Rejection-sampling bound for a gate-feasible starting subset
SA_START_ATTEMPTS = 1000

""" Genetic Algorithm Defaults """
GA_POPULATION_SIZE = 40
GA_GENERATIONS = 100
GA_CROSSOVER_RATE = 0.9
GA_TOURNAMENT_SIZE = 3
GA_ELITISM_COUNT = 1
# mutation rate defaults to 1/N (set when the graph is known)

""" Graph Generation Defaults """
GENLOG_NODES = 10
GENLOG_TRANSACTIONS = 1000

""" Sample Graph """

# Seven unit-weight nodes in two weak components, {1..5} and {6, 7}. Every
# soiled measure of the worked example tables below is reproduced by forward
# reachability over this edge set.
SAMPLE_GRAPH = """\
# sample graph: 7 nodes, 6 directed edges, unit weights
node 1
node 2
node 3
node 4
node 5
node 6
node 7
edge 1 2
edge 1 3
edge 2 5
edge 3 5
edge 4 3
edge 6 7
"""

BETA_ONE_TABLE = 'beta-one'
BETA_OVER_N_TABLE = 'beta-over-n'
SAME_COMPONENT_TABLE = 'same-component'

WORKED_SEEDS = [['1', '6'], ['3', '5'], ['2', '4', '7'], ['2', '6'],
                ['1', '4', '6']]
GATED_SEEDS = WORKED_SEEDS + [['1', '4'], ['6'], ['2', '4']]

# Key: table name,
#   Val: (title, beta form, gated, seed sets in printed order)
SAMPLE_TABLES = {
    BETA_ONE_TABLE:
        ('Cost Function with beta=1', 'const 1', False, WORKED_SEEDS),
    BETA_OVER_N_TABLE:
        ('Cost Function with beta=2/n', 'inv 2', False, WORKED_SEEDS),
    SAME_COMPONENT_TABLE:
        ('Cost Function together with Linguistic Constraint', 'const 1',
         True, GATED_SEEDS),
}
TABLE_ORDER = [BETA_ONE_TABLE, BETA_OVER_N_TABLE, SAME_COMPONENT_TABLE]

# Printed in place of a gate-undefined cost
UNDEFINED_MARK = '-'

""" Spreadsheet Report """

RANKED_TABLE = 'Ranked Candidates'
SEARCH_TABLE = 'Search Summary'
GRAPH_TABLE = 'Graph Summary'

# Cell fills
HEADER_FILL = '#2F4F4F'
LIGHT_FILL = '#F0F8FF'
DARK_FILL = '#D6E4F0'
BEST_FILL = '#F4D03F'

_CELL = {'border': 1}
_DECIMAL = dict(_CELL, num_format='0.0000')
_BANNER = dict(_CELL, bold=True, font_color='white', bg_color=HEADER_FILL, font_size=12)

# Key: format name, Val: XlsxWriter format properties
XLS_FORMATS = {
    'header': _BANNER,
    'title': dict(_BANNER, align='left'),
    'light_bg': dict(_CELL, bg_color=LIGHT_FILL),
    'dark_bg': dict(_CELL, bg_color=DARK_FILL),
    'gold_bg': dict(_CELL, bold=True, bg_color=BEST_FILL),
    'decimal_light': dict(_DECIMAL, bg_color=LIGHT_FILL),
    'decimal_dark': dict(_DECIMAL, bg_color=DARK_FILL),
    'decimal_gold': dict(_DECIMAL, bold=True, bg_color=BEST_FILL),
}
