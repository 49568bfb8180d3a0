"""
Cost Functions

Scores a seed set by trading its soiled measure S against its size n:

    basic        S^2 + beta(n) * (1 - n/N)^2
    generalized  alpha(n) * S^2 + beta(n) * (gamma(n) - delta(n) * n/N)^2
                     + sum_k eps_k * C_k
    gated        generalized cost AND (gates); undefined when the min-composed
                 gate degree falls below a gate's threshold tau

The critical subset is the nonempty seed set maximizing the cost.

"""

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from pysoil import constraints
from pysoil.constants import DEFAULT_MEASURE, MEASURE_MODES
from pysoil.errors import ConfigError, GraphValidationError
from pysoil.graph import Graph
from pysoil.taint import SeedSet, soil

CONST = 'const'
INV = 'inv'

DEFINED = 'defined'
GATE_UNDEFINED = 'gate-undefined'


@dataclass(frozen=True)
class CoefficientFn:
    """
    Coefficient function of n: 'const c' (c) or 'inv c' (c / n).
    """
    form: str
    c: float

    def __post_init__(self):
        if self.form not in (CONST, INV):
            raise ConfigError('coefficient form must be const or inv, got ' + str(self.form))
        if not math.isfinite(self.c):
            raise ConfigError('coefficient must be finite, got ' + repr(self.c))

    def __call__(self, n: int) -> float:
        if self.form == CONST:
            return self.c
        return self.c / n

    @classmethod
    def parse(cls, text: str) -> 'CoefficientFn':
        """ Reads 'const 1' / 'inv 2' (the latter meaning 2/n). """
        fields = text.split()
        if len(fields) != 2:
            raise ConfigError('expected \'const <real>\' or \'inv <real>\', got \'' + text + '\'')
        try:
            c = float(fields[1])
        except ValueError:
            raise ConfigError('coefficient \'' + fields[1] + '\' is not a number')
        return cls(fields[0], c)

    def __str__(self):
        c = self.c
        return self.form + ' ' + (str(int(c)) if c.is_integer() else repr(c))


ONE = CoefficientFn(CONST, 1.0)


@dataclass(frozen=True)
class GateSpec:
    constraint_id: str
    tau: float = 1.0


@dataclass(frozen=True)
class PenaltySpec:
    constraint_id: str
    epsilon: float


@dataclass(frozen=True)
class CostSpec:
    """
    Coefficients, penalty terms, gates and measure mode of a cost function.

    Defaults reduce the generalized cost to the basic cost with beta = 1.
    """
    alpha: CoefficientFn = ONE
    beta: CoefficientFn = ONE
    gamma: CoefficientFn = ONE
    delta: CoefficientFn = ONE
    penalties: Tuple[PenaltySpec, ...] = field(default_factory=tuple)
    gates: Tuple[GateSpec, ...] = field(default_factory=tuple)
    measure_mode: str = DEFAULT_MEASURE

    def __post_init__(self):
        if self.measure_mode not in MEASURE_MODES:
            raise ConfigError('Unknown measure mode ' + str(self.measure_mode)
                              + '. Please choose from:\n\t[' + ', '.join(MEASURE_MODES) + ']')
        object.__setattr__(self, 'penalties', tuple(self.penalties))
        object.__setattr__(self, 'gates', tuple(self.gates))
        for gate in self.gates:
            if not 0.0 < gate.tau <= 1.0:
                raise ConfigError('gate ' + gate.constraint_id + ': tau must lie in (0, 1], got '
                                  + repr(gate.tau))
            constraints.resolve(gate.constraint_id)
        for penalty in self.penalties:
            if not math.isfinite(penalty.epsilon):
                raise ConfigError('penalty ' + penalty.constraint_id + ': eps must be finite')
            constraints.resolve(penalty.constraint_id)


def beta_one_spec(**kwargs) -> CostSpec:
    """ S^2 + (1 - n/N)^2 """
    return CostSpec(beta=ONE, **kwargs)


def beta_over_n_spec(c: float = 2.0, **kwargs) -> CostSpec:
    """ S^2 + (c/n) * (1 - n/N)^2 """
    return CostSpec(beta=CoefficientFn(INV, c), **kwargs)


@dataclass(frozen=True)
class Score:
    """
    Evaluated cost of one seed set.

    value is None iff status is gate-undefined; S, n and gate_degree are
    always recorded.
    """
    status: str
    value: Optional[float]
    S: float
    n: int
    gate_degree: float

    @property
    def defined(self) -> bool:
        return self.status == DEFINED


def _check_ranges(S, n, N):
    if not 1 <= n <= N:
        raise GraphValidationError('subset size n=' + str(n) + ' outside 1..N=' + str(N))
    if not 0.0 <= S <= 1.0:
        raise GraphValidationError('soiled measure ' + repr(S) + ' outside [0, 1]')


def basic_cost(S: float, n: int, N: int, beta: CoefficientFn = ONE) -> float:
    """ S^2 + beta(n) * (1 - n/N)^2 """
    _check_ranges(S, n, N)
    return S ** 2 + beta(n) * (1 - n / N) ** 2


def generalized_cost(S: float, n: int, N: int, spec: CostSpec,
                     constraint_values: Sequence[float] = ()) -> float:
    """
    alpha(n) * S^2 + beta(n) * (gamma(n) - delta(n) * n/N)^2 + sum_k eps_k * C_k

    Arguments:
        constraint_values   C_k, aligned with spec.penalties
    """
    _check_ranges(S, n, N)
    if len(constraint_values) != len(spec.penalties):
        raise ConfigError('expected ' + str(len(spec.penalties)) + ' constraint values, got '
                          + str(len(constraint_values)))
    value = spec.alpha(n) * S ** 2 + spec.beta(n) * (spec.gamma(n) - spec.delta(n) * n / N) ** 2
    for penalty, c_k in zip(spec.penalties, constraint_values):
        value += penalty.epsilon * c_k
    return value


def gated_cost(S: float, n: int, N: int, spec: CostSpec,
               gate_degrees: Sequence[float] = (),
               constraint_values: Sequence[float] = ()) -> Score:
    """
    Generalized cost AND-composed with the gates of spec.

    Arguments:
        gate_degrees        degrees in [0, 1], aligned with spec.gates
        constraint_values   C_k, aligned with spec.penalties

    Returns: Score, gate-undefined when min(gate_degrees) < tau of any gate
    """
    if len(gate_degrees) != len(spec.gates):
        raise ConfigError('expected ' + str(len(spec.gates)) + ' gate degrees, got '
                          + str(len(gate_degrees)))
    mu = constraints.fuzzy_and(gate_degrees)
    if any(mu < gate.tau for gate in spec.gates):
        _check_ranges(S, n, N)
        return Score(GATE_UNDEFINED, None, S, n, mu)
    value = generalized_cost(S, n, N, spec, constraint_values)
    return Score(DEFINED, value, S, n, mu)


def evaluate(g: Graph, seeds: SeedSet, spec: CostSpec) -> Score:
    """ Propagates from seeds and scores them under spec. """
    report = soil(g, seeds, spec.measure_mode)
    gate_degrees = [constraints.resolve(gate.constraint_id)(g, seeds) for gate in spec.gates]
    values = [constraints.resolve(p.constraint_id)(g, seeds) for p in spec.penalties]
    return gated_cost(report.soiled_measure, seeds.n, g.N, spec, gate_degrees, values)
