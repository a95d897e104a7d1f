import random

import pytest

from ramsey_abc.abc_search import (
    BUDGET_EXHAUSTED,
    EMPLOYED,
    ONLOOKER,
    SCOUT,
    WITNESS_FOUND,
    Bee,
    Colony,
    SearchParams,
    default_init_density,
    employed_phase,
    init_colony,
    onlooker_phase,
    run,
    scout_phase,
)
from ramsey_abc.counting import FitnessReport, fitness
from ramsey_abc.graph import Graph


def small_params(**overrides) -> SearchParams:
    defaults = dict(p=3, q=3, n=5, colony_size=4, maxlimit=3, seed=0, budget=1000)
    defaults.update(overrides)
    return SearchParams(**defaults)


def test_params_validation():
    with pytest.raises(ValueError):
        small_params(colony_size=3).validate()
    with pytest.raises(ValueError):
        small_params(colony_size=5).validate()
    with pytest.raises(ValueError):
        small_params(maxlimit=0).validate()
    with pytest.raises(ValueError):
        small_params(alpha=0.0).validate()
    with pytest.raises(ValueError):
        small_params(alpha=1.5).validate()
    with pytest.raises(ValueError):
        small_params(budget=0).validate()
    with pytest.raises(ValueError):
        small_params(mode="annealing").validate()
    with pytest.raises(ValueError):
        small_params(p=6).validate()


def test_default_init_density():
    # (3,3,5): degree range [2,2] over 4 possible neighbours
    assert default_init_density(3, 3, 5) == pytest.approx(0.5)
    # unknown sub-values fall back to 0.5
    assert default_init_density(6, 6, 50) == 0.5


def test_init_split_and_order():
    rng = random.Random(0)
    colony = init_colony(small_params(q=4, n=8, budget=10_000), rng)
    employed = [b for b in colony.bees if b.role == EMPLOYED]
    onlookers = [b for b in colony.bees if b.role == ONLOOKER]
    assert len(employed) == len(onlookers) == 2
    assert all(b.position is None and b.fitness is None for b in onlookers)
    assert all(b.staynum == 1 for b in employed)
    assert colony.evaluations == 4
    # the best initial draw stays with the employed half
    assert min(b.fitness.total for b in employed) == colony.best_fitness.total


def test_init_deterministic():
    a = init_colony(small_params(q=4, n=8), random.Random(42))
    b = init_colony(small_params(q=4, n=8), random.Random(42))
    assert [bee.fitness.total for bee in a.bees if bee.fitness] == [
        bee.fitness.total for bee in b.bees if bee.fitness
    ]
    assert a.best_position == b.best_position


def test_budget_equal_to_colony_size_returns_initial_best():
    params = small_params(q=4, n=8, colony_size=4, budget=4)
    result = run(params)
    assert result.reason == BUDGET_EXHAUSTED
    assert result.evaluations == 4
    assert result.rounds == 0
    assert result.best_fitness.total == min(
        row.best_total for row in result.history
    )


def _scripted_colony(evaluate, maxlimit=3, alpha=1.0):
    """Two employed bees at integer positions with a controllable landscape."""
    params = SearchParams(
        p=3, q=3, n=5, colony_size=4, maxlimit=maxlimit, alpha=alpha, seed=0, budget=1000
    )
    colony = Colony(
        params,
        evaluate=evaluate,
        random_position=lambda rng: 100 + rng.randrange(10),
        neighbor=lambda pos, rng: pos + 1,
    )
    colony.bees = [
        Bee(EMPLOYED, position=0, fitness=evaluate(0)),
        Bee(EMPLOYED, position=0, fitness=evaluate(0)),
        Bee(ONLOOKER),
        Bee(ONLOOKER),
    ]
    colony.best_fitness = evaluate(0)
    colony.best_position = 0
    return colony


def test_equal_fitness_neighbour_is_rejected():
    # flat landscape: neighbours tie, so the strict-improvement rule holds
    # every bee in place and staynum climbs until scout conversion
    colony = _scripted_colony(lambda pos: FitnessReport(1, 0), maxlimit=3)
    rng = random.Random(0)
    employed_phase(colony, rng)
    assert [b.staynum for b in colony.bees[:2]] == [2, 2]
    assert all(b.position == 0 for b in colony.bees[:2])
    employed_phase(colony, rng)
    assert all(b.role == SCOUT for b in colony.bees[:2])


def test_improving_neighbour_is_accepted():
    # strictly decreasing landscape: every sampled neighbour wins
    colony = _scripted_colony(lambda pos: FitnessReport(10 - pos, 0), maxlimit=5)
    rng = random.Random(0)
    employed_phase(colony, rng)
    for bee in colony.bees[:2]:
        assert bee.position == 1
        assert bee.staynum == 1
        assert bee.fitness.total == 9


def test_stagnant_bee_turns_scout_with_maxlimit_one():
    # maxlimit=1: one failed attempt converts the bee; a fresh scout draw
    # restores the employed count
    colony = _scripted_colony(lambda pos: FitnessReport(1, 0), maxlimit=1)
    rng = random.Random(1)
    onlooker_phase(colony, rng)
    followed = [b.follower for b in colony.bees[:2]]
    assert all(f is not None for f in followed)
    employed_phase(colony, rng)
    assert all(b.role == SCOUT for b in colony.bees[:2])
    # scout conversion released the followers
    assert all(b.follower is None for b in colony.bees[:2])
    assert all(b.following is None for b in colony.bees[2:])
    scout_phase(colony, rng)
    assert sum(1 for b in colony.bees if b.role == EMPLOYED) == 2
    assert all(b.staynum == 1 for b in colony.bees[:2])
    assert all(b.position >= 100 for b in colony.bees[:2])


def _two_bee_colony(alpha: float) -> "Colony":
    params = SearchParams(
        p=3, q=3, n=5, colony_size=4, maxlimit=5, alpha=alpha, seed=0, budget=100
    )
    colony = Colony(params, evaluate=None, random_position=None, neighbor=None)
    colony.bees = [
        Bee(EMPLOYED, position="a", fitness=FitnessReport(3, 0)),
        Bee(EMPLOYED, position="b", fitness=FitnessReport(7, 0)),
        Bee(ONLOOKER),
        Bee(ONLOOKER),
    ]
    colony.best_fitness = FitnessReport(3, 0)
    return colony


def test_onlooker_selection_weights():
    # two employed bees (fitness 3 and 7), alpha=1: rank weights (2,1) make
    # the first onlooker pick the better bee with probability 2/3
    trials = 3000
    picked_best = 0
    for seed in range(trials):
        colony = _two_bee_colony(alpha=1.0)
        onlooker_phase(colony, random.Random(seed))
        assert colony.bees[2].following is not None  # alpha=1 always selects
        picked_best += colony.bees[2].following == 0
        # sequential selection without replacement pairs everyone up
        assert colony.bees[3].following is not None
        assert {colony.bees[2].following, colony.bees[3].following} == {0, 1}
    assert 0.63 < picked_best / trials < 0.70


def test_onlooker_alpha_idle():
    # with alpha = 0.5 an onlooker selects nobody half the time
    trials = 3000
    idle = 0
    for seed in range(trials):
        colony = _two_bee_colony(alpha=0.5)
        onlooker_phase(colony, random.Random(seed))
        idle += colony.bees[2].following is None
    assert 0.45 < idle / trials < 0.55


def test_all_employed_followed_is_noop():
    params = small_params(q=4, n=8)
    rng = random.Random(3)
    colony = init_colony(params, rng)
    onlooker_phase(colony, rng)
    employed = [b for b in colony.bees if b.role == EMPLOYED]
    onlookers = [b for b in colony.bees if b.role == ONLOOKER]
    # alpha = 1 and as many onlookers as employed: everyone pairs up
    assert all(b.follower is not None for b in employed)
    assert all(b.following is not None for b in onlookers)
    state = [(b.follower, b.following) for b in colony.bees]
    onlooker_phase(colony, rng)
    assert state == [(b.follower, b.following) for b in colony.bees]


def test_role_conservation_through_rounds():
    params = SearchParams(p=3, q=4, n=8, colony_size=8, maxlimit=2, seed=5, budget=2000)
    rng = random.Random(params.seed)
    colony = init_colony(params, rng)
    size = params.colony_size
    for _ in range(30):
        if colony.finished:
            break
        colony.round_no += 1
        employed_phase(colony, rng)
        assert sum(colony.role_counts()) == size
        if not colony.finished:
            onlooker_phase(colony, rng)
            assert sum(colony.role_counts()) == size
        if not colony.finished:
            scout_phase(colony, rng)
            assert sum(colony.role_counts()) == size
            # scouts are always re-employed immediately
            assert colony.role_counts()[2] == 0
        for bee in colony.bees:
            if bee.follower is not None:
                assert bee.role == EMPLOYED
            if bee.following is not None:
                assert bee.role == ONLOOKER


def test_run_finds_triangle_square_witness():
    result = run(SearchParams(p=3, q=3, n=5, seed=1, budget=10_000))
    assert result.reason == WITNESS_FOUND
    assert result.best_fitness.total == 0
    assert fitness(result.best_position, 3, 3).total == 0
    assert isinstance(result.best_position, Graph)


def test_run_history_monotone_and_deterministic():
    params = SearchParams(p=3, q=4, n=8, colony_size=10, maxlimit=5, seed=9, budget=50_000)
    a = run(params)
    b = run(params)
    assert a.history == b.history
    assert a.best_position == b.best_position
    totals = [row.best_total for row in a.history]
    assert all(y <= x for x, y in zip(totals, totals[1:]))
    assert a.evaluations <= params.budget


def test_accepted_moves_differ_by_one_edge():
    # trace positions of one employed bee across rounds in full-graph mode
    params = SearchParams(p=3, q=4, n=8, colony_size=4, maxlimit=50, seed=2, budget=3000)
    rng = random.Random(params.seed)
    colony = init_colony(params, rng)
    bee = next(b for b in colony.bees if b.role == EMPLOYED)
    prev = bee.position
    prev_stay = bee.staynum
    for _ in range(40):
        if colony.finished:
            break
        employed_phase(colony, rng)
        if bee.role != EMPLOYED:
            break
        if bee.position != prev:
            diff = set(prev.edges()) ^ set(bee.position.edges())
            assert len(diff) == 1
            assert bee.staynum == 1
        else:
            assert bee.staynum == prev_stay + 1
        prev = bee.position
        prev_stay = bee.staynum
        onlooker_phase(colony, rng)
        scout_phase(colony, rng)
