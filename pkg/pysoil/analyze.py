"""
Command drivers: analysis of one graph, the worked example tables, log
ingestion, synthetic log generation and default config creation.

Reports go to standard output; status lines and warnings go to standard error.

"""

import sys
from dataclasses import dataclass, field
from typing import List, Optional

from pysoil import config, optimize, report, summary_xlsx, tables
from pysoil.constants import (DEFAULT_MEASURE, DEFAULT_RNG_SEED, DEFAULT_TOP_K,
                              DEFAULT_WORKERS)
from pysoil.cost import INV, CONST, CoefficientFn, CostSpec, GateSpec, PenaltySpec
from pysoil.errors import ConfigError
from pysoil.graph import read_graph, sample_graph, write_graph
from pysoil.ingest import build_from_log, generate_log, read_log, write_log
from pysoil.taint import critical_singletons


def status(message):
    """ Status and warning lines never touch the report on stdout. """
    print(message, file=sys.stderr)


@dataclass
class AnalysisRequest:
    """
    One 'analyze' invocation. None means the flag was not given.
    """
    graph_path: Optional[str] = None
    log_path: Optional[str] = None
    cost_path: Optional[str] = None
    beta_const: Optional[float] = None
    beta_over_n: Optional[float] = None
    measure: Optional[str] = None
    optimizer: Optional[str] = None
    gates: List[str] = field(default_factory=list)
    penalties: List[str] = field(default_factory=list)
    rng_seed: int = DEFAULT_RNG_SEED
    top_k: int = DEFAULT_TOP_K
    output_format: str = 'tsv'
    workers: int = DEFAULT_WORKERS
    xlsx_path: Optional[str] = None
    progress: bool = False


def parse_penalty_flag(text):
    """ 'ID:EPS' (the id itself may contain colons, e.g. cardinality:1:2). """
    constraint_id, sep, eps = text.rpartition(':')
    if sep == '' or constraint_id == '':
        raise ConfigError('--penalty expects ID:EPS, got \'' + text + '\'')
    try:
        return PenaltySpec(constraint_id, float(eps))
    except ValueError:
        raise ConfigError('--penalty ' + text + ': \'' + eps + '\' is not a number')


def build_cost_spec(request):
    """
    Merges the cost config file and the inline flags into one CostSpec.

    Config entries win over conflicting flags; each conflict is warned about.
    """
    if request.beta_const is not None and request.beta_over_n is not None:
        raise ConfigError('--beta-const and --beta-over-n are mutually exclusive')
    flags = {}
    if request.beta_const is not None:
        flags['beta'] = CoefficientFn(CONST, request.beta_const)
    if request.beta_over_n is not None:
        flags['beta'] = CoefficientFn(INV, request.beta_over_n)
    if request.measure is not None:
        flags['measure'] = request.measure
    if request.gates:
        flags['gates'] = [GateSpec(g) for g in request.gates]
    if request.penalties:
        flags['penalties'] = [parse_penalty_flag(p) for p in request.penalties]

    opts = {}
    if request.cost_path is not None:
        (_, opts) = config.read_config(request.cost_path)
        # Empty gate/penalty lists in the file do not count as set
        opts = {k: v for k, v in opts.items() if v != []}
    for key in flags:
        if key in opts and opts[key] != flags[key]:
            status('Warning: ' + key + ' given both in ' + request.cost_path
                   + ' and on the command line; using the config file value')
    merged = dict(flags)
    merged.update(opts)
    return config.build_spec(merged)


def load_graph(request):
    if request.graph_path is not None and request.log_path is not None:
        raise ConfigError('--graph and --log are mutually exclusive')
    if request.graph_path is not None:
        return read_graph(request.graph_path)
    if request.log_path is not None:
        return build_from_log(read_log(request.log_path))
    return sample_graph()


def cmd_analyze(request):
    """
    Searches for the critical subset and prints the ranked candidates.

    Returns: SearchResult
    """
    g = load_graph(request)
    spec = build_cost_spec(request)
    result = optimize.search(g, spec, request.optimizer, rng_seed=request.rng_seed,
                             top_k=request.top_k, workers=request.workers,
                             progress=request.progress)
    sys.stdout.write(report.render_result(result, request.output_format))

    if spec.measure_mode == DEFAULT_MEASURE:
        singles = critical_singletons(g)
        if singles:
            status('Critical single node(s) soiling the whole graph: ' + ','.join(singles))
    if request.xlsx_path is not None:
        summary_xlsx.write_analysis_workbook(request.xlsx_path, g, result, spec)
        status('Complete! See Excel workbook:\n\t' + request.xlsx_path)
    return result


def cmd_tables(output_format='tsv', xlsx_path=None):
    """ Recomputes and prints the three worked example tables. """
    computed = tables.compute_tables()
    sys.stdout.write(report.render_tables(computed, output_format))
    if xlsx_path is not None:
        summary_xlsx.write_tables_workbook(xlsx_path, computed)
        status('Complete! See Excel workbook:\n\t' + xlsx_path)
    return computed


def cmd_ingest(log_path, out_path):
    """ Builds a graph file from a transaction log CSV. """
    records = read_log(log_path)
    g = build_from_log(records)
    write_graph(g, out_path)
    status('Ingested ' + str(len(records)) + ' records: ' + str(g.N) + ' nodes, '
           + str(len(g.edges())) + ' edges -> ' + out_path)
    return g


def cmd_genlog(nodes, transactions, rng_seed, out_path):
    """ Writes a synthetic transaction log CSV. """
    records = generate_log(nodes, transactions, rng_seed)
    write_log(records, out_path)
    status('Generated ' + str(len(records)) + ' records over ' + str(nodes)
           + ' elements -> ' + out_path)
    return records


def cmd_configure(out_path):
    """ Writes the default cost configuration file. """
    config.create_config(out_path, CostSpec())
    status('New cost configuration created: ' + out_path
           + '\nPlease review the coefficients, gates and penalties.')
