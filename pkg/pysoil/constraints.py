"""
Constraint Evaluators

Built-in constraints C_k produce a crisp {0, 1} or fuzzy [0, 1] degree for a
seed set. They are referenced by string id from cost configs and the command
line, and may be used as additive penalties or as AND-composed gates.

Registry ids:
    same-component              all seeds in one weak component
    cardinality:<min>:<max>     min <= n <= max
    require:<id,...>            every listed node is seeded
    forbid:<id,...>             no listed node is seeded
    fuzzy-small:<scale>         membership of "the subset is small"

"""

from dataclasses import dataclass
from typing import Callable, Iterable, List

from pysoil.errors import ConstraintError
from pysoil.graph import Graph, weak_components
from pysoil.taint import SeedSet

CRISP = 'crisp'
FUZZY = 'fuzzy'


@dataclass(frozen=True)
class ConstraintEvaluator:
    id: str
    kind: str
    evaluate: Callable[[Graph, SeedSet], float]

    def __call__(self, g: Graph, seeds: SeedSet) -> float:
        degree = float(self.evaluate(g, seeds))
        if self.kind == CRISP and degree not in (0.0, 1.0):
            raise ConstraintError('crisp constraint ' + self.id
                                  + ' returned ' + repr(degree))
        if not 0.0 <= degree <= 1.0:
            raise ConstraintError('constraint ' + self.id + ' returned '
                                  + repr(degree) + ' outside [0, 1]')
        return degree


def same_component(g: Graph, seeds: SeedSet) -> float:
    """ 1 iff every seed lies in one weak component of g, else 0. """
    partition = weak_components(g)
    components = {partition.component_of[node_id] for node_id in seeds.nodes}
    return 1.0 if len(components) == 1 else 0.0


SAME_COMPONENT = ConstraintEvaluator('same-component', CRISP, same_component)


def cardinality_between(min_n: int, max_n: int) -> ConstraintEvaluator:
    """ Crisp evaluator: 1 iff min_n <= n <= max_n. """
    if not 1 <= min_n <= max_n:
        raise ConstraintError('cardinality bounds must satisfy 1 <= min <= max, got '
                              + str(min_n) + ':' + str(max_n))

    def evaluate(g, seeds):
        return 1.0 if min_n <= seeds.n <= max_n else 0.0

    return ConstraintEvaluator('cardinality:' + str(min_n) + ':' + str(max_n),
                               CRISP, evaluate)


def _check_known(g, node_ids, constraint_id):
    for node_id in node_ids:
        if not g.has_node(node_id):
            raise ConstraintError('constraint ' + constraint_id
                                  + ' names unknown node ' + node_id)


def require_nodes(required: Iterable[str]) -> ConstraintEvaluator:
    """ Crisp evaluator: 1 iff every required node is seeded. """
    required = frozenset(required)
    constraint_id = 'require:' + ','.join(sorted(required))

    def evaluate(g, seeds):
        _check_known(g, required, constraint_id)
        return 1.0 if required <= seeds.nodes else 0.0

    return ConstraintEvaluator(constraint_id, CRISP, evaluate)


def forbid_nodes(forbidden: Iterable[str]) -> ConstraintEvaluator:
    """ Crisp evaluator: 1 iff no forbidden node is seeded. """
    forbidden = frozenset(forbidden)
    constraint_id = 'forbid:' + ','.join(sorted(forbidden))

    def evaluate(g, seeds):
        _check_known(g, forbidden, constraint_id)
        return 1.0 if forbidden.isdisjoint(seeds.nodes) else 0.0

    return ConstraintEvaluator(constraint_id, CRISP, evaluate)


def fuzzy_small_subset(scale: float) -> ConstraintEvaluator:
    """
    Fuzzy evaluator: max(0, 1 - (n - 1) / scale).

    A linear ramp from full membership at n = 1 down to zero at n = 1 + scale.
    """
    if not scale > 0:
        raise ConstraintError('fuzzy-small scale must be positive, got ' + repr(scale))

    def evaluate(g, seeds):
        return max(0.0, 1.0 - (seeds.n - 1) / scale)

    return ConstraintEvaluator('fuzzy-small:' + _number_text(scale), FUZZY, evaluate)


def _number_text(x):
    x = float(x)
    return str(int(x)) if x.is_integer() else repr(x)


def fuzzy_and(degrees: Iterable[float]) -> float:
    """
    AND-composition of gate degrees (minimum t-norm).

    The empty conjunction is 1; for crisp degrees this is logical AND.
    """
    degrees = list(degrees)
    for degree in degrees:
        if not 0.0 <= degree <= 1.0:
            raise ConstraintError('gate degree ' + repr(degree) + ' outside [0, 1]')
    return min(degrees, default=1.0)


def _parse_ids(constraint_id, text):
    ids = [i.strip() for i in text.split(',')]
    if text.strip() == '':
        return []
    if '' in ids:
        raise ConstraintError('empty node id in constraint ' + constraint_id)
    return ids


def _int_field(constraint_id, text):
    try:
        return int(text)
    except ValueError:
        raise ConstraintError('constraint ' + constraint_id + ': \'' + text
                              + '\' is not an integer')


def resolve(constraint_id: str) -> ConstraintEvaluator:
    """
    Looks up a constraint evaluator by registry id.

    Raises ConstraintError naming the id when it is unknown or malformed.
    """
    name, _, rest = constraint_id.partition(':')
    if name == 'same-component' and rest == '':
        return SAME_COMPONENT
    if name == 'cardinality':
        fields = rest.split(':')
        if len(fields) != 2:
            raise ConstraintError('constraint ' + constraint_id
                                  + ': expected cardinality:<min>:<max>')
        return cardinality_between(_int_field(constraint_id, fields[0]),
                                   _int_field(constraint_id, fields[1]))
    if name == 'require':
        return require_nodes(_parse_ids(constraint_id, rest))
    if name == 'forbid':
        return forbid_nodes(_parse_ids(constraint_id, rest))
    if name == 'fuzzy-small':
        try:
            scale = float(rest)
        except ValueError:
            raise ConstraintError('constraint ' + constraint_id
                                  + ': expected fuzzy-small:<scale>')
        return fuzzy_small_subset(scale)
    raise ConstraintError('unknown constraint id ' + constraint_id
                          + '. Please choose from:\n\t[' + ', '.join(REGISTRY_IDS) + ']')


REGISTRY_IDS: List[str] = ['same-component', 'cardinality:<min>:<max>',
                           'require:<id,...>', 'forbid:<id,...>',
                           'fuzzy-small:<scale>']
