import pytest
from hypothesis import given, settings

from pysoil.cost import (CONST, CoefficientFn, CostSpec, GateSpec, beta_one_spec,
                         beta_over_n_spec, evaluate)
from pysoil.errors import InfeasibleError, SearchError
from pysoil.graph import Graph, parse_graph, sample_graph
from pysoil.optimize import (EXHAUSTIVE, GA, SA, AnnealingSchedule, GaParams,
                             anneal, default_optimizer, evolve,
                             exhaustive_search, search)
from pysoil.taint import SeedSet
from strategies import graphs

SAME_COMPONENT = beta_one_spec(gates=(GateSpec('same-component'),))

# Short runs for property checks on random graphs
QUICK_SCHEDULE = AnnealingSchedule(initial_temperature=1.0, cooling_factor=0.5,
                                   steps_per_temperature=20, minimum_temperature=0.01,
                                   restarts=2)
QUICK_PARAMS = GaParams(population_size=10, generations=10)


def chain(n):
    ids = ['c' + str(i) for i in range(n)]
    return Graph([(i, 1.0) for i in ids], list(zip(ids, ids[1:], [1.0] * n)))


@pytest.mark.parametrize('spec, best, value', [
    (beta_one_spec(), ('1', '4', '6'), 65 / 49),
    (beta_over_n_spec(), ('1',), 88 / 49),
    (SAME_COMPONENT, ('1',), 52 / 49),
])
def test_exhaustive_optimum_of_sample(spec, best, value):
    result = exhaustive_search(sample_graph(), spec)
    assert result.best.seeds.sorted_ids() == best
    assert result.best.score.value == pytest.approx(value)
    assert result.evaluations == 127
    assert result.optimizer == EXHAUSTIVE


def test_exhaustive_ranking_is_sorted_and_defined():
    result = exhaustive_search(sample_graph(), SAME_COMPONENT, top_k=20)
    assert len(result.ranked) == 20
    values = [c.score.value for c in result.ranked]
    assert values == sorted(values, reverse=True)
    assert result.ranked[0] == result.best
    assert all(c.score.defined for c in result.ranked)


def test_ties_prefer_smaller_then_lexicographic():
    g = parse_graph('node b\nnode a\n')
    result = exhaustive_search(g, CostSpec(), top_k=3)
    assert [c.seeds.sorted_ids() for c in result.ranked] == [('a', 'b'), ('a',), ('b',)]
    assert result.ranked[1].score.value == result.ranked[2].score.value


def test_ties_on_equal_score_prefer_fewer_nodes():
    # {x} soils everything; {x, y} has the same S but a larger n
    g = parse_graph('node x\nnode y\nedge x y\n')
    spec = CostSpec(beta=CoefficientFn(CONST, 0.0))
    result = exhaustive_search(g, spec, top_k=2)
    assert result.ranked[0].score.value == result.ranked[1].score.value == 1.0
    assert result.best.seeds.sorted_ids() == ('x',)


def test_seed_sets_at_fixed_seed():
    for optimizer, seed in [(SA, 42), (GA, 7)]:
        result = search(sample_graph(), beta_one_spec(), optimizer, rng_seed=seed)
        assert result.best.seeds.sorted_ids() == ('1', '4', '6')
        assert result.best.score.value == pytest.approx(65 / 49)
        assert result.optimizer == optimizer
        assert result.rng_seed == seed


@pytest.mark.parametrize('optimizer', [SA, GA])
def test_fixed_seed_is_reproducible(optimizer):
    g = sample_graph()
    first = search(g, beta_over_n_spec(), optimizer, rng_seed=11)
    second = search(g, beta_over_n_spec(), optimizer, rng_seed=11)
    assert first.to_dict() == second.to_dict()


@pytest.mark.parametrize('run', [
    lambda g, w: anneal(g, beta_one_spec(), QUICK_SCHEDULE, rng_seed=3, workers=w),
    lambda g, w: evolve(g, beta_one_spec(), QUICK_PARAMS, rng_seed=3, workers=w),
])
def test_worker_count_does_not_change_the_result(run):
    g = chain(9)
    assert run(g, 1).to_dict() == run(g, 2).to_dict()


@pytest.mark.parametrize('optimizer', [EXHAUSTIVE, SA, GA])
def test_single_node_graph(optimizer):
    g = parse_graph('node only\n')
    result = search(g, beta_over_n_spec(), optimizer)
    assert result.best.seeds.sorted_ids() == ('only',)
    assert result.best.score.S == 1.0
    assert result.best.score.value == 1.0
    assert len(result.ranked) == 1


def test_ga_from_identical_population():
    g = sample_graph()
    start = [SeedSet(frozenset({'5'}))] * 40
    result = evolve(g, beta_one_spec(), rng_seed=1, initial_population=start)
    assert result.best.score.value >= evaluate(g, start[0], beta_one_spec()).value
    assert result.evaluations > 1


def test_initial_population_size_is_checked():
    with pytest.raises(SearchError):
        evolve(sample_graph(), beta_one_spec(), initial_population=[SeedSet(frozenset({'1'}))])


@pytest.mark.parametrize('optimizer', [EXHAUSTIVE, SA, GA])
def test_gated_searches_rank_only_feasible_subsets(optimizer):
    g = sample_graph()
    result = search(g, SAME_COMPONENT, optimizer, rng_seed=5, top_k=30)
    for candidate in result.ranked:
        assert candidate.score.gate_degree == 1.0
        assert len({'1', '2', '3', '4', '5'} & candidate.seeds.nodes) in (0, candidate.seeds.n)


@pytest.mark.parametrize('optimizer', [EXHAUSTIVE, SA, GA])
def test_infeasible_gates(optimizer):
    spec = CostSpec(gates=(GateSpec('require:1'), GateSpec('forbid:1')))
    with pytest.raises(InfeasibleError) as info:
        search(sample_graph(), spec, optimizer, schedule=QUICK_SCHEDULE, params=QUICK_PARAMS)
    assert info.value.exit_code == 2


def test_exhaustive_cap():
    with pytest.raises(SearchError):
        exhaustive_search(chain(23), beta_one_spec())
    assert default_optimizer(chain(23)) == SA
    assert default_optimizer(sample_graph()) == EXHAUSTIVE


def test_search_argument_checks():
    g = sample_graph()
    with pytest.raises(SearchError):
        search(g, beta_one_spec(), 'tabu')
    with pytest.raises(SearchError):
        search(g, beta_one_spec(), top_k=0)
    with pytest.raises(SearchError):
        search(g, beta_one_spec(), rng_seed=-1)
    with pytest.raises(SearchError):
        anneal(g, beta_one_spec(), workers=0)


@pytest.mark.parametrize('kwargs', [
    {'initial_temperature': 0.0}, {'cooling_factor': 1.0}, {'steps_per_temperature': 0},
    {'minimum_temperature': -1.0}, {'restarts': 0},
])
def test_schedule_validation(kwargs):
    with pytest.raises(SearchError):
        AnnealingSchedule(**kwargs)


@pytest.mark.parametrize('kwargs', [
    {'population_size': 1}, {'generations': 0}, {'mutation_rate': 0.0},
    {'crossover_rate': 1.5}, {'tournament_size': 1}, {'elitism_count': 40},
])
def test_ga_params_validation(kwargs):
    with pytest.raises(SearchError):
        GaParams(**kwargs)


@settings(max_examples=40, deadline=None)
@given(graphs(max_nodes=10))
def test_heuristics_never_beat_the_oracle(g):
    spec = beta_over_n_spec()
    oracle = exhaustive_search(g, spec)
    assert oracle.evaluations == 2 ** g.N - 1
    for result in (anneal(g, spec, QUICK_SCHEDULE, rng_seed=1),
                   evolve(g, spec, QUICK_PARAMS, rng_seed=1)):
        assert result.best.score.value <= oracle.best.score.value
        assert result.evaluations >= 1
        # Reported scores are the scores of the reported subsets
        for candidate in result.ranked:
            assert candidate.score == evaluate(g, candidate.seeds, spec)


@settings(max_examples=100, deadline=None)
@given(graphs(max_nodes=8))
def test_exhaustive_scores_are_sound(g):
    spec = beta_one_spec()
    for candidate in exhaustive_search(g, spec, top_k=5).ranked:
        assert candidate.score == evaluate(g, candidate.seeds, spec)


@pytest.mark.slow
@pytest.mark.parametrize('spec', [beta_one_spec(), beta_over_n_spec(), SAME_COMPONENT])
@pytest.mark.parametrize('optimizer', [SA, GA])
def test_heuristics_find_the_optimum_reliably(optimizer, spec):
    g = sample_graph()
    oracle = exhaustive_search(g, spec).best.score.value
    hits = sum(abs(search(g, spec, optimizer, rng_seed=seed).best.score.value - oracle) <= 1e-9
               for seed in range(1, 101))
    assert hits >= 95
