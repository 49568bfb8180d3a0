"""
Weighted Directed Graph

The Graph class holds the element graph under analysis: node weights, edge
weights and a frozen networkx DiGraph used for reachability. Graph files are
parsed and serialized here, and weak components are computed here.

"""

import math
import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx

from pysoil.constants import MEASURE_MODES, SAMPLE_GRAPH
from pysoil.errors import GraphFormatError, GraphValidationError
from pysoil.parser import ParseRules


@dataclass(frozen=True)
class ComponentPartition:
    """
    Weak components of a graph.

    components      disjoint node-id sets covering every node, ordered by the
                    first declared node of each component
    component_of    node id -> index into components
    """
    components: Tuple[FrozenSet[str], ...]
    component_of: Dict[str, int]


class Graph:
    """
    Immutable weighted digraph.

    Arguments:
        nodes       iterable of (node id, weight)
        edges       iterable of (source id, target id, weight)

    Node and edge declaration order is kept; it fixes the node index used by
    the searches and the order of serialized records.
    """

    def __init__(self, nodes: Iterable[Tuple[str, float]],
                 edges: Iterable[Tuple[str, str, float]]):
        self._node_weights: Dict[str, float] = {}
        for node_id, weight in nodes:
            _check_id(node_id)
            if node_id in self._node_weights:
                raise GraphValidationError('duplicate node id ' + node_id)
            self._node_weights[node_id] = _check_weight(weight, 'node ' + node_id)
        if len(self._node_weights) == 0:
            raise GraphValidationError('graph declares no nodes')

        self._edge_weights: Dict[Tuple[str, str], float] = {}
        for src, dst, weight in edges:
            for end in (src, dst):
                if end not in self._node_weights:
                    raise GraphValidationError('edge ' + src + ' -> ' + dst
                                               + ' refers to undeclared node ' + end)
            if (src, dst) in self._edge_weights:
                raise GraphValidationError('duplicate edge ' + src + ' -> ' + dst)
            self._edge_weights[(src, dst)] = _check_weight(weight, 'edge ' + src
                                                           + ' -> ' + dst)

        self._node_ids = tuple(self._node_weights.keys())
        self._index = {node_id: i for i, node_id in enumerate(self._node_ids)}

        digraph = nx.DiGraph()
        digraph.add_nodes_from(self._node_ids)
        digraph.add_weighted_edges_from((u, v, w) for (u, v), w
                                        in self._edge_weights.items())
        self._digraph = nx.freeze(digraph)
        self._partition = None

    @property
    def N(self) -> int:
        return len(self._node_ids)

    @property
    def node_ids(self) -> Tuple[str, ...]:
        return self._node_ids

    @property
    def digraph(self) -> nx.DiGraph:
        """ Frozen networkx view of the graph (weights under 'weight'). """
        return self._digraph

    def has_node(self, node_id: str) -> bool:
        return node_id in self._node_weights

    def index_of(self, node_id: str) -> int:
        return self._index[node_id]

    def node_weight(self, node_id: str) -> float:
        return self._node_weights[node_id]

    def edge_weight(self, src: str, dst: str) -> float:
        return self._edge_weights[(src, dst)]

    def edges(self) -> List[Tuple[str, str, float]]:
        """ Returns (source, target, weight) in declaration order. """
        return [(u, v, w) for (u, v), w in self._edge_weights.items()]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._node_ids == other._node_ids
                and self._node_weights == other._node_weights
                and self._edge_weights == other._edge_weights)

    def __hash__(self):
        return hash((self._node_ids, frozenset(self._edge_weights.items())))

    def __repr__(self):
        return 'Graph(N=' + str(self.N) + ', edges=' + str(len(self._edge_weights)) + ')'

    def __getstate__(self):
        # Frozen networkx graphs do not pickle; rebuild from the records
        return {'nodes': [(i, self._node_weights[i]) for i in self._node_ids],
                'edges': self.edges()}

    def __setstate__(self, state):
        self.__init__(state['nodes'], state['edges'])


def _check_id(node_id):
    # Ids are single tokens of the graph file format
    if not isinstance(node_id, str) or node_id == '' or re.search(r'\s', node_id):
        raise GraphValidationError('node id must be a non-empty token without '
                                   'whitespace, got ' + repr(node_id))


def _check_weight(weight, what):
    weight = float(weight)
    if not weight > 0 or weight == float('inf'):
        raise GraphValidationError('non-positive or non-finite weight '
                                   + repr(weight) + ' on ' + what)
    return weight


def parse_graph(text: str) -> Graph:
    """
    Parses graph file content into a validated Graph.

    Arguments:
        text        graph file content ('node <id> [w]' / 'edge <s> <t> [w]')

    Returns: Graph (weights default to 1)
    """
    # Configure the parser
    parse_rules = ParseRules('graph')

    nodes = {}
    edges = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if parse_rules.is_skippable(line):
            continue
        (kind, ids, weight) = parse_rules.scan_graph_record(line, lineno)
        if kind == 'node':
            if ids[0] in nodes:
                raise GraphFormatError(lineno, 'duplicate node id ' + ids[0])
            nodes[ids[0]] = weight
        else:
            # Endpoints must already be declared (no implicit nodes)
            for end in ids:
                if end not in nodes:
                    raise GraphFormatError(lineno, 'dangling edge endpoint ' + end)
            if ids in edges:
                raise GraphFormatError(lineno, 'duplicate edge ' + ids[0]
                                       + ' -> ' + ids[1])
            edges[ids] = weight
    return Graph(nodes.items(), [(u, v, w) for (u, v), w in edges.items()])


def read_graph(path) -> Graph:
    """ Reads and parses a UTF-8 graph file. """
    with open(path, 'rb') as f:
        data = f.read()
    return parse_graph(ParseRules('graph').decode(data, path))


def _weight_text(weight):
    # repr() round-trips floats exactly
    if weight == 1.0:
        return ''
    return ' ' + repr(weight)


def serialize_graph(g: Graph) -> str:
    """ Returns graph file content such that parse_graph() rebuilds g. """
    lines = []
    for node_id in g.node_ids:
        lines.append('node ' + node_id + _weight_text(g.node_weight(node_id)))
    for src, dst, weight in g.edges():
        lines.append('edge ' + src + ' ' + dst + _weight_text(weight))
    return '\n'.join(lines) + '\n'


def write_graph(g: Graph, path):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(serialize_graph(g))


def sample_graph() -> Graph:
    """ Returns the embedded seven-node sample graph. """
    return parse_graph(SAMPLE_GRAPH)


def weak_components(g: Graph) -> ComponentPartition:
    """
    Partitions the nodes by connectivity with edge directions ignored.

    The partition is computed once per graph and cached on it.
    """
    if g._partition is None:
        # Order components by their earliest declared node
        components = sorted((frozenset(c) for c in nx.weakly_connected_components(g.digraph)),
                            key=lambda c: min(g.index_of(i) for i in c))
        component_of = {}
        for idx, component in enumerate(components):
            for node_id in component:
                component_of[node_id] = idx
        g._partition = ComponentPartition(tuple(components), component_of)
    return g._partition


def total_weight(g: Graph, mode: str) -> float:
    """
    Sum of all weights on the graph.

    Arguments:
        g       graph
        mode    'node' sums node weights; 'edge' sums edge weights (each
                edge counted once)
    """
    if mode not in MEASURE_MODES:
        raise GraphValidationError('Unknown measure mode ' + str(mode)
                                   + '. Please choose from:\n\t['
                                   + ', '.join(MEASURE_MODES) + ']')
    if mode == 'node':
        total = sum(g.node_weight(i) for i in g.node_ids)
    else:
        weights = [w for (_, _, w) in g.edges()]
        if len(weights) == 0:
            raise GraphValidationError('edge measure is undefined on a graph '
                                       'without edges (zero total weight)')
        total = sum(weights)
    if not math.isfinite(total):
        raise GraphValidationError('total ' + mode + ' weight overflows to ' + repr(total))
    return total
