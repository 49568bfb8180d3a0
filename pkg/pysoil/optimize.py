"""
Critical Subset Search

Maximizes a CostSpec over the nonempty seed subsets of a graph:

    exhaustive_search   enumerates all 2^N - 1 subsets (the oracle)
    anneal              simulated annealing over single-node flips, restarted
    evolve              generational GA over N-bit membership vectors

Subsets are handled as integer bitmasks (bit i = g.node_ids[i]). Gate-undefined
subsets are never ranked. Every random draw comes from a numpy stream seeded by
SeedSequence([rng_seed, unit]) so a search is reproducible for a fixed seed and
does not depend on the number of workers.

"""

import heapq
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Dict, List, Optional, Sequence

import numpy as np
from tqdm import tqdm

from pysoil import constraints, cost
from pysoil.constants import (DEFAULT_RNG_SEED, DEFAULT_TOP_K, DEFAULT_WORKERS,
                              ENUMERATION_CAP, GA_CROSSOVER_RATE,
                              GA_ELITISM_COUNT, GA_GENERATIONS,
                              GA_POPULATION_SIZE, GA_TOURNAMENT_SIZE,
                              SA_COOLING_FACTOR, SA_INITIAL_TEMPERATURE,
                              SA_MINIMUM_TEMPERATURE, SA_RESTARTS,
                              SA_START_ATTEMPTS, SA_STEPS_PER_TEMPERATURE)
from pysoil.cost import CostSpec, Score
from pysoil.errors import InfeasibleError, SearchError
from pysoil.graph import Graph
from pysoil.taint import SeedSet, TaintIndex

EXHAUSTIVE = 'exhaustive'
SA = 'sa'
GA = 'ga'


@dataclass(frozen=True)
class Candidate:
    seeds: SeedSet
    score: Score

    def to_dict(self):
        return {'seeds': list(self.seeds.sorted_ids()),
                'n': self.score.n,
                'S': self.score.S,
                'score': self.score.value,
                'gate_degree': self.score.gate_degree}


@dataclass(frozen=True)
class AnnealingSchedule:
    initial_temperature: float = SA_INITIAL_TEMPERATURE
    cooling_factor: float = SA_COOLING_FACTOR
    steps_per_temperature: int = SA_STEPS_PER_TEMPERATURE
    minimum_temperature: float = SA_MINIMUM_TEMPERATURE
    restarts: int = SA_RESTARTS

    def __post_init__(self):
        if not self.initial_temperature > 0:
            raise SearchError('initial temperature must be positive')
        if not 0 < self.cooling_factor < 1:
            raise SearchError('cooling factor must lie in (0, 1)')
        if self.steps_per_temperature < 1:
            raise SearchError('steps per temperature must be at least 1')
        if not self.minimum_temperature > 0:
            raise SearchError('minimum temperature must be positive')
        if self.restarts < 1:
            raise SearchError('restarts must be at least 1')


@dataclass(frozen=True)
class GaParams:
    """ mutation_rate None means 1/N for the graph being searched. """
    population_size: int = GA_POPULATION_SIZE
    generations: int = GA_GENERATIONS
    mutation_rate: Optional[float] = None
    crossover_rate: float = GA_CROSSOVER_RATE
    tournament_size: int = GA_TOURNAMENT_SIZE
    elitism_count: int = GA_ELITISM_COUNT

    def __post_init__(self):
        if self.population_size < 2:
            raise SearchError('population size must be at least 2')
        if self.generations < 1:
            raise SearchError('generations must be at least 1')
        if self.mutation_rate is not None and not 0 < self.mutation_rate <= 1:
            raise SearchError('mutation rate must lie in (0, 1]')
        if not 0 <= self.crossover_rate <= 1:
            raise SearchError('crossover rate must lie in [0, 1]')
        if self.tournament_size < 2:
            raise SearchError('tournament size must be at least 2')
        if not 0 <= self.elitism_count < self.population_size:
            raise SearchError('elitism count must lie in [0, population size)')


@dataclass(frozen=True)
class SearchResult:
    best: Candidate
    ranked: List[Candidate]
    evaluations: int
    rng_seed: int
    optimizer: str

    def to_dict(self):
        return {'optimizer': self.optimizer,
                'rng_seed': self.rng_seed,
                'evaluations': self.evaluations,
                'best': self.best.to_dict(),
                'ranked': [c.to_dict() for c in self.ranked]}


class Scorer:
    """
    Scores subset bitmasks under one graph and cost spec, caching each score.

    Produces exactly the Score of cost.evaluate() on the same seed set.
    """

    def __init__(self, g: Graph, spec: CostSpec):
        self.g = g
        self.spec = spec
        self.index = TaintIndex(g, spec.measure_mode)
        self.gates = [constraints.resolve(gate.constraint_id) for gate in spec.gates]
        self.penalties = [constraints.resolve(p.constraint_id) for p in spec.penalties]
        self.cache: Dict[int, Score] = {}

    def score(self, mask: int) -> Score:
        sc = self.cache.get(mask)
        if sc is None:
            sc = self.evaluate(mask)
            self.cache[mask] = sc
        return sc

    def evaluate(self, mask: int) -> Score:
        """ Uncached score of a nonzero subset mask. """
        S = self.index.measure(self.index.soiled_mask(mask))
        n = bin(mask).count('1')
        degrees = []
        values = []
        if self.gates or self.penalties:
            seeds = self.index.seeds_of(mask)
            degrees = [gate(self.g, seeds) for gate in self.gates]
            values = [penalty(self.g, seeds) for penalty in self.penalties]
        return cost.gated_cost(S, n, self.g.N, self.spec, degrees, values)


def rank_key(candidate: Candidate):
    """ Higher score first, then smaller n, then lexicographic node ids. """
    return (-candidate.score.value, candidate.score.n, candidate.seeds.sorted_ids())


def _check_top_k(top_k):
    if top_k < 1:
        raise SearchError('top-k must be at least 1, got ' + str(top_k))


def _check_rng_seed(rng_seed):
    if rng_seed < 0:
        raise SearchError('rng seed must be unsigned, got ' + str(rng_seed))


def _stream(rng_seed, unit):
    """ Independent random stream of one search unit. """
    return np.random.default_rng(np.random.SeedSequence([rng_seed, unit]))


def _mask_of_bits(bits) -> int:
    mask = 0
    for i in np.flatnonzero(bits).tolist():
        mask |= 1 << i
    return mask


def _finish(index, scores, top_k, rng_seed, optimizer, evaluations):
    """ Ranks the defined (mask, score) pairs and builds the SearchResult. """
    candidates = (Candidate(index.seeds_of(mask), sc) for mask, sc in scores if sc.defined)
    ranked = heapq.nsmallest(top_k, candidates, key=rank_key)
    if len(ranked) == 0:
        raise InfeasibleError('no candidate subset satisfies the gates')
    return SearchResult(ranked[0], ranked, evaluations, rng_seed, optimizer)


""" Exhaustive Search """


def exhaustive_search(g: Graph, spec: CostSpec, top_k: int = DEFAULT_TOP_K,
                      cap: int = ENUMERATION_CAP, rng_seed: int = DEFAULT_RNG_SEED,
                      progress: bool = False) -> SearchResult:
    """
    Evaluates every nonempty subset; the best defined one is the global maximum.

    Arguments:
        g           graph (at most cap nodes)
        spec        cost spec
        top_k       number of ranked candidates to keep
        cap         enumeration cap on N
        rng_seed    recorded in the result only (the search is deterministic)
        progress    show a tqdm progress bar
    """
    _check_top_k(top_k)
    _check_rng_seed(rng_seed)
    if g.N > cap:
        raise SearchError('exhaustive search is capped at N=' + str(cap) + ' nodes, graph has '
                          + str(g.N) + '; use --optimizer sa or ga')
    scorer = Scorer(g, spec)
    count = (1 << g.N) - 1
    masks = tqdm(range(1, count + 1), total=count, disable=not progress,
                 desc='exhaustive', unit='subset')
    scores = ((mask, scorer.evaluate(mask)) for mask in masks)
    return _finish(scorer.index, scores, top_k, rng_seed, EXHAUSTIVE, count)


""" Simulated Annealing """


def _anneal_restart(g, spec, schedule, rng_seed, restart):
    """
    One annealing run; returns its score cache (every subset it evaluated).
    """
    rng = _stream(rng_seed, restart)
    scorer = Scorer(g, spec)
    N = g.N

    # Rejection-sample a uniformly random nonempty, gate-feasible start
    current = None
    for _ in range(SA_START_ATTEMPTS):
        mask = _mask_of_bits(rng.integers(0, 2, size=N))
        if mask != 0 and scorer.score(mask).defined:
            current = mask
            break
    if current is None:
        raise InfeasibleError('no gate-feasible starting subset found in '
                              + str(SA_START_ATTEMPTS) + ' attempts')
    current_value = scorer.score(current).value

    steps = schedule.steps_per_temperature
    T = schedule.initial_temperature
    while T >= schedule.minimum_temperature:
        flips = rng.integers(0, N, size=steps).tolist()
        draws = rng.random(steps).tolist()
        for i, u in zip(flips, draws):
            neighbor = current ^ (1 << i)
            if neighbor == 0:
                continue
            sc = scorer.score(neighbor)
            if not sc.defined:
                continue
            delta = sc.value - current_value
            if delta >= 0 or u < math.exp(delta / T):
                current = neighbor
                current_value = sc.value
        T *= schedule.cooling_factor
    return scorer.cache


def anneal(g: Graph, spec: CostSpec, schedule: Optional[AnnealingSchedule] = None,
           rng_seed: int = DEFAULT_RNG_SEED, top_k: int = DEFAULT_TOP_K,
           workers: int = DEFAULT_WORKERS, progress: bool = False) -> SearchResult:
    """
    Simulated annealing with restarts.

    Each restart starts from a random gate-feasible subset and flips one
    uniformly chosen node per step; worsening moves are accepted with
    probability exp(delta / T) under geometric cooling. Restart k draws from
    its own stream, so restarts may run on separate workers.
    """
    if schedule is None:
        schedule = AnnealingSchedule()
    _check_top_k(top_k)
    _check_rng_seed(rng_seed)
    if workers < 1:
        raise SearchError('workers must be at least 1')

    run = partial(_anneal_restart, g, spec, schedule, rng_seed)
    restarts = range(schedule.restarts)
    if workers == 1:
        caches = [run(k) for k in tqdm(restarts, disable=not progress, desc='anneal',
                                       unit='restart')]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            caches = list(tqdm(executor.map(run, restarts), total=schedule.restarts,
                               disable=not progress, desc='anneal', unit='restart'))

    evaluations = sum(len(c) for c in caches)
    merged = {}
    for c in caches:
        merged.update(c)
    return _finish(TaintIndex(g, spec.measure_mode), merged.items(), top_k, rng_seed, SA,
                   evaluations)


""" Genetic Algorithm """

# Worker-side scorer for parallel fitness batches
_worker_scorer = None


def _init_worker(g, spec):
    global _worker_scorer
    _worker_scorer = Scorer(g, spec)


def _worker_score(mask):
    return _worker_scorer.evaluate(mask)


def _repair(mask, N, rng):
    """ Empty individuals get one uniformly random bit. """
    if mask == 0:
        mask = 1 << int(rng.integers(0, N))
    return mask


def _fitness(sc):
    # Gate-undefined individuals rank below every defined one
    return sc.value if sc.defined else -math.inf


def _tournament(population, fitness, size, rng):
    entrants = rng.integers(0, len(population), size=size).tolist()
    winner = entrants[0]
    for idx in entrants[1:]:
        if fitness[idx] > fitness[winner]:
            winner = idx
    return population[winner]


def evolve(g: Graph, spec: CostSpec, params: Optional[GaParams] = None,
           rng_seed: int = DEFAULT_RNG_SEED, top_k: int = DEFAULT_TOP_K,
           workers: int = DEFAULT_WORKERS, progress: bool = False,
           initial_population: Optional[Sequence[SeedSet]] = None) -> SearchResult:
    """
    Generational genetic algorithm over N-bit membership vectors.

    Tournament selection, uniform crossover at crossover_rate, per-bit mutation
    at mutation_rate (default 1/N) and elitism of the best defined individuals.
    Empty individuals are repaired by setting one random bit.

    Arguments:
        initial_population  optional seed sets replacing the random first
                            generation (its size must equal population_size)
    """
    if params is None:
        params = GaParams()
    _check_top_k(top_k)
    _check_rng_seed(rng_seed)
    if workers < 1:
        raise SearchError('workers must be at least 1')

    N = g.N
    P = params.population_size
    mutation_rate = params.mutation_rate if params.mutation_rate is not None else 1.0 / N
    full = (1 << N) - 1
    rng = _stream(rng_seed, 0)
    scorer = Scorer(g, spec)

    if initial_population is None:
        bits = rng.integers(0, 2, size=(P, N))
        population = [_repair(_mask_of_bits(row), N, rng) for row in bits]
    else:
        if len(initial_population) != P:
            raise SearchError('initial population has ' + str(len(initial_population))
                              + ' individuals, expected ' + str(P))
        population = [scorer.index.mask_of(seeds) for seeds in initial_population]

    executor = None
    if workers > 1:
        executor = ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                                       initargs=(g, spec))

    def evaluate(individuals):
        if executor is not None:
            # Deduplicated and ordered so results do not depend on scheduling
            pending = sorted({m for m in individuals if m not in scorer.cache})
            for mask, sc in zip(pending, executor.map(_worker_score, pending)):
                scorer.cache[mask] = sc
        return [scorer.score(m) for m in individuals]

    try:
        scores = evaluate(population)
        for _ in tqdm(range(params.generations), disable=not progress, desc='evolve',
                      unit='generation'):
            fitness = [_fitness(sc) for sc in scores]

            # Elites: best defined individuals carry over unchanged
            defined = [(Candidate(scorer.index.seeds_of(m), sc), m)
                       for m, sc in zip(population, scores) if sc.defined]
            defined.sort(key=lambda pair: rank_key(pair[0]))
            children = [m for _, m in defined[:params.elitism_count]]

            while len(children) < P:
                p1 = _tournament(population, fitness, params.tournament_size, rng)
                p2 = _tournament(population, fitness, params.tournament_size, rng)
                if rng.random() < params.crossover_rate:
                    take = _mask_of_bits(rng.random(N) < 0.5)
                    c1 = (p1 & take) | (p2 & ~take & full)
                    c2 = (p2 & take) | (p1 & ~take & full)
                else:
                    c1, c2 = p1, p2
                for child in (c1, c2):
                    child ^= _mask_of_bits(rng.random(N) < mutation_rate)
                    if len(children) < P:
                        children.append(_repair(child, N, rng))
            population = children
            scores = evaluate(population)
    finally:
        if executor is not None:
            executor.shutdown()

    return _finish(scorer.index, scorer.cache.items(), top_k, rng_seed, GA, len(scorer.cache))


""" Dispatch """


def default_optimizer(g: Graph) -> str:
    """ Exhaustive up to the enumeration cap, annealing beyond it. """
    return EXHAUSTIVE if g.N <= ENUMERATION_CAP else SA


def search(g: Graph, spec: CostSpec, optimizer: Optional[str] = None,
           rng_seed: int = DEFAULT_RNG_SEED, top_k: int = DEFAULT_TOP_K,
           workers: int = DEFAULT_WORKERS, progress: bool = False,
           schedule: Optional[AnnealingSchedule] = None,
           params: Optional[GaParams] = None) -> SearchResult:
    """ Runs the named optimizer (default_optimizer(g) when None). """
    if optimizer is None:
        optimizer = default_optimizer(g)
    if optimizer == EXHAUSTIVE:
        return exhaustive_search(g, spec, top_k=top_k, rng_seed=rng_seed, progress=progress)
    if optimizer == SA:
        return anneal(g, spec, schedule, rng_seed=rng_seed, top_k=top_k, workers=workers,
                      progress=progress)
    if optimizer == GA:
        return evolve(g, spec, params, rng_seed=rng_seed, top_k=top_k, workers=workers,
                      progress=progress)
    raise SearchError('Unknown optimizer ' + str(optimizer) + '. Please choose from:\n\t['
                      + ', '.join([EXHAUSTIVE, SA, GA]) + ']')
