"""
Taint Propagation

A tracking transaction planted into the seed nodes propagates along directed
edges. The soiled segment is the forward-reachable node set together with
every edge leaving a soiled node; the soiled measure S is its share of the
graph's total weight, and the clean measure is 1 - S.

"""

from dataclasses import dataclass, replace
from typing import FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from pysoil.constants import DEFAULT_MEASURE
from pysoil.errors import GraphValidationError
from pysoil.graph import Graph, total_weight


@dataclass(frozen=True)
class SeedSet:
    """ Nonempty set of node ids into which the tracking transaction is planted. """
    nodes: FrozenSet[str]

    @classmethod
    def of(cls, g: Graph, node_ids: Iterable[str]) -> 'SeedSet':
        """ Validates node_ids against g (nonempty, known, no duplicates). """
        node_ids = list(node_ids)
        if len(node_ids) == 0:
            raise GraphValidationError('seed set must be nonempty')
        if len(set(node_ids)) != len(node_ids):
            raise GraphValidationError('seed set lists a node more than once: '
                                       + ','.join(node_ids))
        for node_id in node_ids:
            if not g.has_node(node_id):
                raise GraphValidationError('seed node ' + node_id + ' is not in the graph')
        return cls(frozenset(node_ids))

    @property
    def n(self) -> int:
        return len(self.nodes)

    def sorted_ids(self) -> Tuple[str, ...]:
        """ Node ids in lexicographic order (display and tie-break order). """
        return tuple(sorted(self.nodes))

    def __str__(self):
        return ','.join(self.sorted_ids())


@dataclass(frozen=True)
class SoiledReport:
    """
    Soiled segment of one propagation.

    soiled_measure and clean_measure stay None until the report is measured
    (see measure_report).
    """
    soiled_nodes: FrozenSet[str]
    soiled_edges: FrozenSet[Tuple[str, str]]
    soiled_measure: Optional[float] = None
    clean_measure: Optional[float] = None
    measure_mode: Optional[str] = None


def propagate(g: Graph, seeds: SeedSet) -> SoiledReport:
    """
    Propagates the tracking transaction from seeds along directed edges.

    Returns: SoiledReport with the forward closure of seeds and every edge
             whose source is soiled (measures unset)
    """
    for node_id in seeds.nodes:
        if not g.has_node(node_id):
            raise GraphValidationError('seed node ' + node_id + ' is not in the graph')
    soiled = set(seeds.nodes)
    for node_id in seeds.nodes:
        # Everything is already soiled
        if len(soiled) == g.N:
            break
        soiled |= nx.descendants(g.digraph, node_id)
    soiled_edges = frozenset((u, v) for (u, v, _) in g.edges() if u in soiled)
    return SoiledReport(frozenset(soiled), soiled_edges)


def soiled_weight(g: Graph, report: SoiledReport, mode: str = DEFAULT_MEASURE) -> float:
    """ Sum of weights in the soiled segment, summed in declaration order. """
    if mode == 'node':
        return sum(g.node_weight(i) for i in g.node_ids if i in report.soiled_nodes)
    if mode == 'edge':
        return sum(w for (u, v, w) in g.edges() if (u, v) in report.soiled_edges)
    raise GraphValidationError('Unknown measure mode ' + str(mode))


def soiled_measure(g: Graph, report: SoiledReport, mode: str = DEFAULT_MEASURE) -> float:
    """
    Ratio of the soiled segment's weight to the graph's total weight.

    In edge mode every soiled edge counts once, cycles included.
    """
    total = total_weight(g, mode)
    return soiled_weight(g, report, mode) / total


def measure_report(g: Graph, report: SoiledReport,
                   mode: str = DEFAULT_MEASURE) -> SoiledReport:
    """ Returns the report with its soiled and clean measures filled in. """
    s = soiled_measure(g, report, mode)
    return replace(report, soiled_measure=s, clean_measure=1.0 - s, measure_mode=mode)


def soil(g: Graph, seeds: SeedSet, mode: str = DEFAULT_MEASURE) -> SoiledReport:
    """ propagate() followed by measure_report(). """
    return measure_report(g, propagate(g, seeds), mode)


def critical_singletons(g: Graph) -> List[str]:
    """ Node ids that soil every node of g on their own (node-mode S = 1). """
    return [node_id for node_id in g.node_ids
            if len(nx.descendants(g.digraph, node_id)) == g.N - 1]


class TaintIndex:
    """
    Bitmask form of propagate() for the searches.

    Bit i of a subset mask stands for g.node_ids[i]. The soiled node mask of a
    subset is the OR of the per-node forward closures; its weight is summed in
    node order so that measure() equals soiled_measure() exactly.

    Arguments:
        g       graph
        mode    measure mode ('node' or 'edge')
    """

    def __init__(self, g: Graph, mode: str = DEFAULT_MEASURE):
        self.g = g
        self.mode = mode
        self.N = g.N
        self.total = total_weight(g, mode)
        self.closures = []
        for node_id in g.node_ids:
            mask = 1 << g.index_of(node_id)
            for reached in nx.descendants(g.digraph, node_id):
                mask |= 1 << g.index_of(reached)
            self.closures.append(mask)
        if mode == 'node':
            self.weights = [g.node_weight(i) for i in g.node_ids]
        else:
            # An edge is soiled iff its source is; kept per edge in
            # declaration order to preserve summation order
            self.edge_order = []
            for (u, v, w) in g.edges():
                self.edge_order.append((g.index_of(u), w))

    def soiled_mask(self, mask: int) -> int:
        soiled = 0
        i = 0
        while mask:
            if mask & 1:
                soiled |= self.closures[i]
            mask >>= 1
            i += 1
        return soiled

    def measure(self, soiled: int) -> float:
        """ Soiled measure of a soiled node mask. """
        if self.mode == 'node':
            weight = sum(w for i, w in enumerate(self.weights) if (soiled >> i) & 1)
        else:
            weight = sum(w for (i, w) in self.edge_order if (soiled >> i) & 1)
        return weight / self.total

    def mask_of(self, seeds: SeedSet) -> int:
        mask = 0
        for node_id in seeds.nodes:
            mask |= 1 << self.g.index_of(node_id)
        return mask

    def seeds_of(self, mask: int) -> SeedSet:
        ids = [node_id for i, node_id in enumerate(self.g.node_ids) if (mask >> i) & 1]
        return SeedSet(frozenset(ids))
