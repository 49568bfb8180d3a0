"""
------------------------------------------------------------------------------
Script to find the critical subset of a weighted directed element graph.
    - Plant a tracking transaction into candidate seed sets and measure the
        soiled segment it reaches
    - Score each seed set with a cost trading soiled measure against size,
        optionally under penalty and gate constraints
    - Maximize the cost exhaustively, by simulated annealing or by a genetic
        algorithm
------------------------------------------------------------------------------

@file   main.py

@brief Critical subset analysis of element graphs.

------------------------------------------------------------------------------
Software Execution:

usage: pysoil [-h] [-v] {analyze,tables,ingest,gen-log,configure} ...

    pysoil analyze --graph db.graph --beta-over-n 2 --optimizer sa
    pysoil analyze --log transactions.csv --gate same-component
    pysoil tables --xlsx tables.xlsx
    pysoil gen-log --nodes 10 --transactions 1000 --rng-seed 1 -o log.csv
    pysoil ingest log.csv -o db.graph
    pysoil configure cost.cfg

Exit codes: 0 success, 1 parse/validation failure, 2 no defined candidate.

"""
# Built-in libraries to handle command line inputs/outputs/execution results
import argparse
import sys
import traceback

# Supplementary python scripts
from pysoil import analyze
from pysoil.constants import (DEFAULT_RNG_SEED, DEFAULT_TOP_K, DEFAULT_WORKERS,
                              GENLOG_NODES, GENLOG_TRANSACTIONS, MEASURE_MODES,
                              OPTIMIZERS, OUTPUT_FORMATS)
from pysoil.errors import PySoilError

""" Command Line Inputs """


class ArgumentParser(argparse.ArgumentParser):
    """ Usage errors are validation failures: exit code 1, not 2. """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, self.prog + ": error: " + message + "\n")


def build_parser():
    """ Definition of expected command line inputs. """
    parser = ArgumentParser(prog='pysoil',
                            description='PySoil, A Critical Subset Analyzer')
    parser.add_argument('-v', '--verbose', action='store_true', default=False,
                        help='print the full traceback on failure')
    commands = parser.add_subparsers(dest='command', required=True)

    sub = commands.add_parser('analyze', help='search a graph for its critical subset')
    source = sub.add_mutually_exclusive_group()
    source.add_argument('--graph', default=None,
                        help='graph file (default: the embedded sample graph)')
    source.add_argument('--log', default=None,
                        help='transaction log CSV, ingested on the fly')
    sub.add_argument('--cost', default=None,
                     help='cost config file; its entries win over conflicting flags')
    beta = sub.add_mutually_exclusive_group()
    beta.add_argument('--beta-const', type=float, default=None, metavar='X',
                      help='beta(n) = X')
    beta.add_argument('--beta-over-n', type=float, default=None, metavar='X',
                      help='beta(n) = X/n')
    sub.add_argument('--measure', choices=MEASURE_MODES, default=None,
                     help='(optional, default: node) weigh soiled nodes or soiled edges')
    sub.add_argument('--optimizer', choices=OPTIMIZERS, default=None,
                     help='(optional, default: exhaustive when N <= 22, else sa)')
    sub.add_argument('--gate', action='append', default=[], metavar='ID',
                     help='gate constraint id (repeatable)')
    sub.add_argument('--penalty', action='append', default=[], metavar='ID:EPS',
                     help='penalty constraint id and multiplier (repeatable)')
    sub.add_argument('--rng-seed', type=int, default=DEFAULT_RNG_SEED, metavar='U64')
    sub.add_argument('--top', type=int, default=DEFAULT_TOP_K, metavar='K',
                     help='number of ranked candidates to print')
    sub.add_argument('--format', choices=OUTPUT_FORMATS, default='tsv')
    sub.add_argument('--workers', type=int, default=DEFAULT_WORKERS,
                     help='parallel search workers')
    sub.add_argument('--xlsx', default=None, metavar='PATH',
                     help='(optional) also write an Excel workbook')
    sub.add_argument('--progress', action='store_true', default=False,
                     help='show search progress on stderr')

    sub = commands.add_parser('tables', help='recompute the worked example tables')
    sub.add_argument('--format', choices=OUTPUT_FORMATS, default='tsv')
    sub.add_argument('--xlsx', default=None, metavar='PATH',
                     help='(optional) also write an Excel workbook')

    sub = commands.add_parser('ingest', help='build a graph file from a transaction log')
    sub.add_argument('log', help='transaction log CSV (src,dst[,count])')
    sub.add_argument('-o', '--out', required=True, help='output graph file')

    sub = commands.add_parser('gen-log', help='generate a synthetic transaction log')
    sub.add_argument('--nodes', type=int, default=GENLOG_NODES)
    sub.add_argument('--transactions', type=int, default=GENLOG_TRANSACTIONS)
    sub.add_argument('--rng-seed', type=int, default=DEFAULT_RNG_SEED, metavar='U64')
    sub.add_argument('-o', '--out', required=True, help='output log CSV')

    sub = commands.add_parser('configure', help='write the default cost config file')
    sub.add_argument('out', help='output cost config file')
    return parser


def run(args):
    if args.command == 'analyze':
        request = analyze.AnalysisRequest(
            graph_path=args.graph, log_path=args.log, cost_path=args.cost,
            beta_const=args.beta_const, beta_over_n=args.beta_over_n,
            measure=args.measure, optimizer=args.optimizer, gates=args.gate,
            penalties=args.penalty, rng_seed=args.rng_seed, top_k=args.top,
            output_format=args.format, workers=args.workers, xlsx_path=args.xlsx,
            progress=args.progress)
        analyze.cmd_analyze(request)
    elif args.command == 'tables':
        analyze.cmd_tables(args.format, args.xlsx)
    elif args.command == 'ingest':
        analyze.cmd_ingest(args.log, args.out)
    elif args.command == 'gen-log':
        analyze.cmd_genlog(args.nodes, args.transactions, args.rng_seed, args.out)
    elif args.command == 'configure':
        analyze.cmd_configure(args.out)


""" Main Code """


def main(argv=None):
    """ Runs one command; returns the process exit code. """
    args = build_parser().parse_args(argv)
    try:
        run(args)
    except (PySoilError, OSError) as e:
        if args.verbose:
            traceback.print_exc()
        print('Error: ' + str(e), file=sys.stderr)
        return getattr(e, 'exit_code', 1)
    return 0


if __name__ == '__main__':
    sys.exit(main())
