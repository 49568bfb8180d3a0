"""
Worked Example Tables

Recomputes the three cost tables of the embedded sample graph: beta = 1,
beta = 2/n, and beta = 1 gated by the same-component constraint. Soiled and
clean measures are printed as unreduced fractions of the total weight and the
cost expression is spelled out per row.

"""

from dataclasses import dataclass
from typing import List, Optional

from pysoil import constraints, cost
from pysoil.constants import SAMPLE_TABLES, TABLE_ORDER, UNDEFINED_MARK
from pysoil.cost import CoefficientFn, CostSpec, GateSpec
from pysoil.graph import Graph, sample_graph, total_weight
from pysoil.taint import SeedSet, soil, soiled_weight


@dataclass(frozen=True)
class TableRow:
    serial: int
    seeds: SeedSet
    gate: Optional[int]      # same-component degree, gated tables only
    soiled: str
    clean: str
    expression: str
    score: cost.Score

    @property
    def value(self) -> Optional[float]:
        return self.score.value


@dataclass(frozen=True)
class Table:
    name: str
    title: str
    gated: bool
    rows: List[TableRow]

    def best_row(self) -> Optional[TableRow]:
        """ Highest defined row (first one on ties). """
        best = None
        for row in self.rows:
            if row.score.defined and (best is None or row.value > best.value):
                best = row
        return best


def _number(x):
    return str(int(x)) if float(x).is_integer() else repr(float(x))


def _ratio(num, den):
    """ 'num/den' for integral weights, else the decimal value. """
    if float(num).is_integer() and float(den).is_integer():
        return _number(num) + '/' + _number(den)
    return repr(num / den)


def _expression(soiled_w, total, n, N, beta: CoefficientFn):
    """ Cost expression in the tables' notation, e.g. '36/49+2/2*(1-2/7)^2'. """
    if soiled_w == total:
        s_term = '1'
    elif float(soiled_w).is_integer() and float(total).is_integer():
        s_term = _number(soiled_w ** 2) + '/' + _number(total ** 2)
    else:
        s_term = repr((soiled_w / total) ** 2)
    if beta.form == cost.INV:
        b_term = _number(beta.c) + '/' + str(n) + '*'
    elif beta.c == 1:
        b_term = ''
    else:
        b_term = _number(beta.c) + '*'
    return s_term + '+' + b_term + '(1-' + str(n) + '/' + str(N) + ')^2'


def table_spec(name) -> CostSpec:
    (_, beta_text, gated, _) = SAMPLE_TABLES[name]
    gates = (GateSpec('same-component'),) if gated else ()
    beta = CoefficientFn.parse(beta_text)
    if beta.form == cost.INV:
        return cost.beta_over_n_spec(beta.c, gates=gates)
    if beta.c == 1:
        return cost.beta_one_spec(gates=gates)
    return CostSpec(beta=beta, gates=gates)


def compute_table(name, g: Optional[Graph] = None) -> Table:
    """
    Computes one named table (see constants.SAMPLE_TABLES).

    Arguments:
        name    beta-one, beta-over-n or same-component
        g       graph (default: the embedded sample graph)
    """
    if g is None:
        g = sample_graph()
    (title, _, gated, seed_sets) = SAMPLE_TABLES[name]
    spec = table_spec(name)
    total = total_weight(g, 'node')

    rows = []
    for serial, ids in enumerate(seed_sets, start=1):
        seeds = SeedSet.of(g, ids)
        report = soil(g, seeds, 'node')
        soiled_w = soiled_weight(g, report, 'node')
        score = cost.evaluate(g, seeds, spec)
        gate = int(constraints.same_component(g, seeds)) if gated else None
        clean = '0' if soiled_w == total else _ratio(total - soiled_w, total)
        if score.defined:
            expression = _expression(soiled_w, total, seeds.n, g.N, spec.beta)
        else:
            expression = UNDEFINED_MARK
        rows.append(TableRow(serial, seeds, gate, _ratio(soiled_w, total), clean,
                             expression, score))
    return Table(name, title, gated, rows)


def compute_tables(g: Optional[Graph] = None) -> List[Table]:
    return [compute_table(name, g) for name in TABLE_ORDER]
