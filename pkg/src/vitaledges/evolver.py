"""Memetic search for the C edges whose removal minimises robustness R.

An individual is a set of exactly ``cost`` distinct edge ids. Each
generation pairs parents at random and swaps their non-common edges
(crossover), mutates roulette-selected individuals with a degree-guided
local search, and keeps the winners of parent-versus-child 2-tournaments.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .exceptions import ValidationError
from .graph import Graph, robustness_masked

ROULETTE_EPS = 1e-9


class Individual:
    """A removal set of fixed size with a lazily cached fitness."""

    __slots__ = ("_removed", "_fitness")

    def __init__(self, removed: Iterable[int], fitness: Optional[float] = None):
        self._removed = set(int(e) for e in removed)
        self._fitness = fitness

    @property
    def removed(self) -> frozenset:
        return frozenset(self._removed)

    @property
    def edges(self) -> Tuple[int, ...]:
        """Edge ids in ascending order."""
        return tuple(sorted(self._removed))

    @property
    def fitness(self) -> Optional[float]:
        return self._fitness

    @property
    def cost(self) -> int:
        return len(self._removed)

    def __contains__(self, e) -> bool:
        return e in self._removed

    def __len__(self):
        return len(self._removed)

    def replace_edge(self, old: int, new: int):
        if old not in self._removed or new in self._removed:
            raise ValidationError(f"cannot replace edge {old} with {new}")
        self._removed.discard(old)
        self._removed.add(new)
        self._fitness = None

    def copy(self) -> "Individual":
        return Individual(self._removed, self._fitness)

    def __eq__(self, other):
        if not isinstance(other, Individual):
            return NotImplemented
        return self._removed == other._removed

    def __repr__(self):
        return f"Individual({list(self.edges)}, fitness={self._fitness})"


@dataclass(frozen=True)
class MAParams:
    """Memetic algorithm settings.

    ``local_search_prob=None`` means ``min(1, 5 / cost)``. ``elitism`` keeps
    the best individual of parents and children in every generation and
    re-inserts the best one seen so far if it was lost.
    """

    cost: int
    population_size: int = 20
    crossover_prob: float = 0.8
    local_search_prob: Optional[float] = None
    mu: float = 0.7
    generations: int = 500
    rng_seed: Optional[int] = 0
    elitism: bool = True

    @property
    def p_local(self) -> float:
        if self.local_search_prob is not None:
            return self.local_search_prob
        return min(1.0, 5.0 / self.cost) if self.cost > 0 else 1.0

    def validate(self, g: Optional[Graph] = None):
        if self.population_size < 2 or self.population_size % 2:
            raise ValidationError("population_size must be an even integer >= 2")
        for name in ("crossover_prob", "mu"):
            val = getattr(self, name)
            if not 0.0 <= val <= 1.0:
                raise ValidationError(f"{name} must lie in [0, 1], got {val}")
        if not 0.0 <= self.p_local <= 1.0:
            raise ValidationError(f"local_search_prob must lie in [0, 1], got {self.p_local}")
        if self.generations < 0:
            raise ValidationError("generations must be >= 0")
        if self.cost < 0:
            raise ValidationError("cost must be >= 0")
        if g is not None and self.cost > g.m:
            raise ValidationError(f"cost {self.cost} exceeds edge count {g.m}")


@dataclass
class RunReport:
    best: Individual
    best_fitness: float
    history: List[float] = field(default_factory=list)
    n_evaluations: int = 0
    elapsed: float = 0.0


def init_population(g: Graph, params: MAParams, rng: np.random.Generator) -> List[Individual]:
    """``population_size`` uniform random C-subsets of the edge ids."""
    if params.cost > g.m:
        raise ValidationError(f"cost {params.cost} exceeds edge count {g.m}")
    return [
        Individual(rng.choice(g.m, size=params.cost, replace=False).tolist())
        for _ in range(params.population_size)
    ]


class FitnessEvaluator:
    """Robustness of the base graph minus an individual's edges, with a counter."""

    def __init__(self, g: Graph):
        self.g = g
        self.count = 0

    def __call__(self, ind: Individual) -> float:
        if ind._fitness is None:
            alive = np.ones(self.g.m, dtype=np.bool_)
            alive[list(ind._removed)] = False
            ind._fitness = robustness_masked(self.g, alive)
            self.count += 1
        return ind._fitness


def evaluate_fitness(g: Graph, ind: Individual) -> float:
    """R of ``g`` with ``ind``'s edges removed; cached on the individual."""
    for e in ind._removed:
        if not 0 <= e < g.m:
            raise ValidationError(f"unknown edge id {e}")
    return FitnessEvaluator(g)(ind)


def swap_noncommon(
    p1: Individual, p2: Individual, mask: Sequence[bool]
) -> Tuple[Individual, Individual]:
    """Children of ``p1``/``p2`` with the i-th non-common edges swapped where ``mask[i]``.

    The non-common sets are paired in ascending edge-id order.
    """
    if p1.cost != p2.cost:
        raise ValidationError(f"parents differ in cost: {p1.cost} vs {p2.cost}")
    common = p1._removed & p2._removed
    only1 = sorted(p1._removed - common)
    only2 = sorted(p2._removed - common)
    c1, c2 = p1.copy(), p2.copy()
    for i, (a, b) in enumerate(zip(only1, only2)):
        if mask[i]:
            c1.replace_edge(a, b)
            c2.replace_edge(b, a)
    return c1, c2


def crossover(
    p1: Individual, p2: Individual, p_c: float, rng: np.random.Generator
) -> Tuple[Individual, Individual]:
    """Swap each pair of non-common edges between the children with probability ``p_c``."""
    if p1.cost != p2.cost:
        raise ValidationError(f"parents differ in cost: {p1.cost} vs {p2.cost}")
    k = len(p1._removed - p2._removed)
    return swap_noncommon(p1, p2, rng.random(k) < p_c)


def accepts(mu: float, current: Tuple[int, int], candidate: Tuple[int, int]) -> bool:
    """Local-search acceptance on endpoint degrees ``(k_i, k_j)`` -> ``(k_l, k_m)``."""
    return mu * abs(candidate[0] - candidate[1]) - abs(current[0] - current[1]) > 0


def _draw_outside(ind: Individual, m: int, rng: np.random.Generator) -> int:
    if 2 * len(ind) <= m:
        while True:
            e = int(rng.integers(m))
            if e not in ind._removed:
                return e
    pool = [e for e in range(m) if e not in ind._removed]
    return pool[int(rng.integers(len(pool)))]


def local_search(
    ind: Individual, g: Graph, p_l: float, mu: float, rng: np.random.Generator
) -> Individual:
    """Mutate ``ind`` in place and return it.

    Each edge of the original set is, with probability ``p_l``, offered a
    uniformly drawn replacement outside the set. The move is kept when
    ``mu * |k_l - k_m| - |k_i - k_j| > 0`` using degrees of the intact graph.
    """
    if len(ind) >= g.m:
        return ind
    deg = g.degree
    snapshot = ind.edges
    hits = rng.random(len(snapshot)) < p_l
    for e, hit in zip(snapshot, hits):
        if not hit:
            continue
        cand = _draw_outside(ind, g.m, rng)
        i, j = g.edges[e]
        l, m = g.edges[cand]
        if accepts(mu, (deg[i], deg[j]), (deg[l], deg[m])):
            ind.replace_edge(e, cand)
    return ind


def roulette_weights(pool: Sequence[Individual]) -> np.ndarray:
    f = np.array([ind.fitness for ind in pool], dtype=float)
    return f.max() - f + ROULETTE_EPS


def roulette_select(pool: Sequence[Individual], rng: np.random.Generator) -> Individual:
    """Draw one individual with weight ``f_max - f + eps`` (lower R is likelier)."""
    if not pool:
        raise ValidationError("roulette pool is empty")
    if any(ind.fitness is None for ind in pool):
        raise ValidationError("roulette pool needs cached fitness values")
    w = roulette_weights(pool)
    return pool[int(rng.choice(len(pool), p=w / w.sum()))]


def tournament_select(
    parents: Sequence[Individual],
    children: Sequence[Individual],
    rng: np.random.Generator,
    elitism: bool = True,
) -> List[Individual]:
    """Pairwise parent-vs-child tournaments, returning fresh copies.

    With ``elitism`` the best of parents and children replaces the worst
    winner unless it already won a slot.
    """
    if len(parents) != len(children):
        raise ValidationError(
            f"parents and children differ in size: {len(parents)} vs {len(children)}"
        )
    if not parents:
        return []
    size = len(parents)
    winners = []
    for _ in range(size):
        a = parents[int(rng.integers(size))]
        b = children[int(rng.integers(size))]
        winners.append(b if b.fitness < a.fitness else a)
    if elitism:
        elite = min(list(parents) + list(children), key=lambda ind: ind.fitness)
        if not any(w is elite for w in winners):
            worst = max(range(size), key=lambda i: winners[i].fitness)
            winners[worst] = elite
    return [w.copy() for w in winners]


def _best(pop: Iterable[Individual]) -> Individual:
    return min(pop, key=lambda ind: ind.fitness)


def run_ma(g: Graph, params: MAParams) -> RunReport:
    """Run the memetic algorithm and report the best removal set ever seen."""
    params.validate(g)
    start = time.perf_counter()
    rng = np.random.default_rng(params.rng_seed)
    evaluate = FitnessEvaluator(g)
    size = params.population_size

    parents = init_population(g, params, rng)
    for ind in parents:
        evaluate(ind)
    best = _best(parents).copy()
    history = [best.fitness]

    for _ in range(params.generations):
        order = rng.permutation(size)
        children = []
        for a, b in zip(order[0::2], order[1::2]):
            children.extend(crossover(parents[a], parents[b], params.crossover_prob, rng))
        for ind in children:
            evaluate(ind)

        pool = parents + children
        pool_best = _best(pool)
        if pool_best.fitness < best.fitness:
            best = pool_best.copy()
        w = roulette_weights(pool)
        picks = rng.choice(len(pool), size=2 * size, p=w / w.sum())
        for k in picks:
            local_search(pool[k], g, params.p_local, params.mu, rng)
        for ind in pool:
            evaluate(ind)
        pool_best = _best(pool)
        if pool_best.fitness < best.fitness:
            best = pool_best.copy()

        parents = tournament_select(parents, children, rng, elitism=params.elitism)
        if params.elitism and not any(ind == best for ind in parents):
            # local search may have overwritten the incumbent before the tournament
            worst = max(range(size), key=lambda i: parents[i].fitness)
            parents[worst] = best.copy()
        history.append(best.fitness)

    return RunReport(
        best=best,
        best_fitness=best.fitness,
        history=history,
        n_evaluations=evaluate.count,
        elapsed=time.perf_counter() - start,
    )
