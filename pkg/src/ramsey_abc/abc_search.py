"""Artificial-bee-colony minimization of the clique + independent-set fitness.

The colony splits into roles. Employed bees walk the one-edge-flip (or
one-attachment-flip) neighbourhood of their current graph, moving only on
strict improvement; a follower doubles an employed bee's sampling. Onlookers
pick an employed bee to follow with probability proportional to its fitness
rank. An employed bee stuck at the same position for maxlimit rounds turns
scout, abandons its graph and re-enters from a fresh random position.

Every run is a pure function of its parameters: one seeded generator drives
all sampling, so identical params reproduce identical histories.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable

from . import bounds
from .construct import (
    DEFAULT_DEGREE_RANGE,
    enumerate_triangle_free,
    mutate_extension,
    random_extension,
)
from .counting import FitnessReport, build_indep_cache, extension_fitness, fitness
from .graph import Graph, toggle_edge

EMPLOYED = "employed"
ONLOOKER = "onlooker"
SCOUT = "scout"

WITNESS_FOUND = "witness-found"
BUDGET_EXHAUSTED = "budget-exhausted"

FULL_MODE = "full"
EXTENSION_MODE = "extension"


@dataclass(frozen=True)
class SearchParams:
    p: int
    q: int
    n: int
    colony_size: int = 20
    maxlimit: int = 15
    alpha: float = 1.0
    seed: int = 0
    budget: int = 100_000
    mode: str = FULL_MODE
    init_density: float | None = None
    degree_range: tuple[int, int] = DEFAULT_DEGREE_RANGE
    count_cap: int | None = None

    def validate(self) -> None:
        if self.colony_size < 4 or self.colony_size % 2:
            raise ValueError("colony_size must be even and at least 4")
        if self.maxlimit < 1:
            raise ValueError("maxlimit must be >= 1")
        if not 0 < self.alpha <= 1:
            raise ValueError("alpha must be in (0, 1]")
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.mode not in (FULL_MODE, EXTENSION_MODE):
            raise ValueError(f"unknown mode {self.mode!r}")
        if not (1 <= self.p <= self.n and 1 <= self.q <= self.n):
            raise ValueError("orders p, q must lie in 1..n")


@dataclass
class Bee:
    role: str
    position: Any = None
    fitness: FitnessReport | None = None
    staynum: int = 1
    follower: int | None = None  # onlooker index, employed bees only
    following: int | None = None  # employed index, onlooker bees only


@dataclass(frozen=True)
class RoundStats:
    round: int
    best_total: int
    evaluations: int
    employed: int
    onlookers: int
    scouts: int


@dataclass(frozen=True)
class SearchResult:
    best_position: Any
    best_fitness: FitnessReport
    rounds: int
    evaluations: int
    history: tuple[RoundStats, ...]
    reason: str


class Colony:
    """Mutable search state: bees, counters, best-so-far, and the three
    mode-specific callables (evaluate, fresh random position, neighbour)."""

    def __init__(
        self,
        params: SearchParams,
        evaluate: Callable[[Any], FitnessReport],
        random_position: Callable[[random.Random], Any],
        neighbor: Callable[[Any, random.Random], Any],
    ):
        self.params = params
        self.evaluate = evaluate
        self.random_position = random_position
        self.neighbor = neighbor
        self.bees: list[Bee] = []
        self.round_no = 0
        self.evaluations = 0
        self.best_position: Any = None
        self.best_fitness: FitnessReport | None = None
        self.finished: str | None = None

    def budget_left(self) -> bool:
        return self.evaluations < self.params.budget

    def assess(self, position: Any) -> FitnessReport:
        """Evaluate one position, charging the budget and updating best-so-far."""
        rep = self.evaluate(position)
        self.evaluations += 1
        if self.best_fitness is None or rep.total < self.best_fitness.total:
            self.best_fitness = rep
            self.best_position = position
        if rep.total == 0:
            self.finished = WITNESS_FOUND
        return rep

    def role_counts(self) -> tuple[int, int, int]:
        e = sum(1 for b in self.bees if b.role == EMPLOYED)
        o = sum(1 for b in self.bees if b.role == ONLOOKER)
        s = sum(1 for b in self.bees if b.role == SCOUT)
        return e, o, s

    def stats(self) -> RoundStats:
        e, o, s = self.role_counts()
        return RoundStats(
            self.round_no, self.best_fitness.total, self.evaluations, e, o, s
        )


def default_init_density(p: int, q: int, n: int) -> float:
    """Edge probability biasing random starts toward the feasible degree band:
    midpoint of the admissible degree range over n-1, else 0.5."""
    if n < 2:
        return 0.5
    try:
        rng = bounds.degree_range(p, q, n)
    except ValueError:
        return 0.5
    if not rng.feasible:
        return 0.5
    return min(1.0, max(0.0, (rng.lo + rng.hi) / 2 / (n - 1)))


def _random_graph(n: int, density: float, rng: random.Random) -> Graph:
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _random_pair(n: int, rng: random.Random) -> tuple[int, int]:
    u = rng.randrange(n)
    v = rng.randrange(n - 1)
    if v >= u:
        v += 1
    return u, v


def make_colony(
    params: SearchParams,
    base: Graph | None = None,
    cache=None,
) -> Colony:
    """Wire up the mode-specific callables (no positions generated yet)."""
    params.validate()
    if params.mode == FULL_MODE:
        density = (
            params.init_density
            if params.init_density is not None
            else default_init_density(params.p, params.q, params.n)
        )

        def random_position(rng: random.Random) -> Graph:
            return _random_graph(params.n, density, rng)

        def neighbor(pos: Graph, rng: random.Random) -> Graph:
            u, v = _random_pair(params.n, rng)
            return toggle_edge(pos, u, v)

        def evaluate(pos: Graph) -> FitnessReport:
            return fitness(pos, params.p, params.q, cap=params.count_cap)

        return Colony(params, evaluate, random_position, neighbor)

    if base is None:
        raise ValueError("extension mode needs a base graph")
    added = params.n - base.n
    if not 1 <= added <= 7:
        raise ValueError(
            f"extension mode supports 1..7 added vertices, got n={params.n} over base {base.n}"
        )
    catalog = enumerate_triangle_free(added)
    if cache is None:
        lo_k = max(1, params.q - added)
        hi_k = min(params.q, base.n)
        cache = build_indep_cache(base, range(lo_k, hi_k + 1))
    draw_counter = [0]

    def random_position(rng: random.Random):
        inner = catalog[draw_counter[0] % len(catalog)]
        draw_counter[0] += 1
        return random_extension(base, inner, params.degree_range, rng)

    def neighbor(pos, rng: random.Random):
        return mutate_extension(pos, rng, params.degree_range)

    def evaluate(pos) -> FitnessReport:
        return extension_fitness(cache, pos, params.p, params.q)

    return Colony(params, evaluate, random_position, neighbor)


def init_colony(
    params: SearchParams,
    rng: random.Random,
    base: Graph | None = None,
    cache=None,
) -> Colony:
    """Generate and evaluate colony_size random positions; the better half
    keep their graphs as employed bees, the rest become empty-handed onlookers."""
    colony = make_colony(params, base=base, cache=cache)
    scored: list[tuple[int, int, Any, FitnessReport]] = []
    for i in range(params.colony_size):
        pos = colony.random_position(rng)
        rep = colony.assess(pos)
        scored.append((rep.total, i, pos, rep))
        if colony.finished or not colony.budget_left():
            break
    scored.sort(key=lambda item: (item[0], item[1]))
    half = params.colony_size // 2
    for rank, (_, _, pos, rep) in enumerate(scored):
        if rank < half:
            colony.bees.append(Bee(EMPLOYED, pos, rep, staynum=1))
        else:
            colony.bees.append(Bee(ONLOOKER))
    while len(colony.bees) < params.colony_size:
        colony.bees.append(Bee(ONLOOKER))
    if colony.finished is None and not colony.budget_left():
        colony.finished = BUDGET_EXHAUSTED
    return colony


def employed_phase(colony: Colony, rng: random.Random) -> None:
    """Each employed bee (and its follower, if any) samples one adjacent
    position; the best sample replaces the current graph only when strictly
    better. Stagnant bees at staynum >= maxlimit turn scout and release
    their follower back to the onlooker pool."""
    params = colony.params
    for bee in colony.bees:
        if colony.finished:
            return
        if bee.role != EMPLOYED:
            continue
        draws = 2 if bee.follower is not None else 1
        candidates: list[tuple[FitnessReport, Any]] = []
        for _ in range(draws):
            if not colony.budget_left():
                colony.finished = BUDGET_EXHAUSTED
                break
            pos = colony.neighbor(bee.position, rng)
            if pos is None:
                continue
            rep = colony.assess(pos)
            candidates.append((rep, pos))
            if colony.finished:
                break
        moved = False
        if candidates:
            best_rep, best_pos = min(candidates, key=lambda c: c[0].total)
            if best_rep.total < bee.fitness.total:
                bee.position = best_pos
                bee.fitness = best_rep
                bee.staynum = 1
                moved = True
        if colony.finished:
            return
        if not moved:
            bee.staynum += 1
            if bee.staynum >= params.maxlimit:
                bee.role = SCOUT
                if bee.follower is not None:
                    colony.bees[bee.follower].following = None
                    bee.follower = None


def onlooker_phase(colony: Colony, rng: random.Random) -> None:
    """Idle onlookers pick an unfollowed employed bee with probability
    alpha * w / sum(w), where ranks over all employed bees give the best
    weight E and the worst weight 1, and the sum runs over the employed bees
    still unfollowed. With alpha < 1 an onlooker may pick nobody."""
    if colony.finished:
        return
    params = colony.params
    employed = [
        (bee.fitness.total, i) for i, bee in enumerate(colony.bees) if bee.role == EMPLOYED
    ]
    employed.sort()
    count = len(employed)
    weight = {i: count - rank for rank, (_, i) in enumerate(employed)}
    for idx, bee in enumerate(colony.bees):
        if bee.role != ONLOOKER or bee.following is not None:
            continue
        open_bees = [i for _, i in employed if colony.bees[i].follower is None
                     and colony.bees[i].role == EMPLOYED]
        if not open_bees:
            continue
        total_w = sum(weight[i] for i in open_bees)
        r = rng.random()
        acc = 0.0
        for i in open_bees:
            acc += params.alpha * weight[i] / total_w
            if r < acc:
                colony.bees[i].follower = idx
                bee.following = i
                break


def scout_phase(colony: Colony, rng: random.Random) -> None:
    """Scouts abandon their graphs, draw fresh random positions with the same
    generator as initialization, and re-enter as employed bees."""
    for bee in colony.bees:
        if colony.finished:
            return
        if bee.role != SCOUT:
            continue
        if not colony.budget_left():
            colony.finished = BUDGET_EXHAUSTED
            return
        pos = colony.random_position(rng)
        rep = colony.assess(pos)
        bee.role = EMPLOYED
        bee.position = pos
        bee.fitness = rep
        bee.staynum = 1


def run(
    params: SearchParams,
    base: Graph | None = None,
    cache=None,
) -> SearchResult:
    """Loop employed -> onlooker -> scout until a witness appears or the
    evaluation budget runs out. Identical params give identical results."""
    rng = random.Random(params.seed)
    colony = init_colony(params, rng, base=base, cache=cache)
    history = [colony.stats()]
    while colony.finished is None:
        colony.round_no += 1
        employed_phase(colony, rng)
        if colony.finished is None:
            onlooker_phase(colony, rng)
        if colony.finished is None:
            scout_phase(colony, rng)
        assert colony.best_fitness.total <= history[-1].best_total
        history.append(colony.stats())
        if colony.finished is None and not colony.budget_left():
            colony.finished = BUDGET_EXHAUSTED
    return SearchResult(
        best_position=colony.best_position,
        best_fitness=colony.best_fitness,
        rounds=colony.round_no,
        evaluations=colony.evaluations,
        history=tuple(history),
        reason=colony.finished,
    )
