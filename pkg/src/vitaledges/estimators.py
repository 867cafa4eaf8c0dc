"""scikit-learn style wrappers.

``fit(X)`` finds the vital edges of graph ``X`` (a :class:`Graph` or an
``(m, 2)`` edge array); ``transform(X)`` returns the edges of ``X`` with the
fitted vital edges removed; ``score(X)`` is ``-R`` of that residual graph so
that higher is better, as usual for estimators.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .centrality import beas_select
from .evolver import MAParams, run_ma
from .graph import Graph, robustness
from .validation import check_cost, check_graph


class _VitalEdgesBase(TransformerMixin, BaseEstimator):
    def _finish(self, g: Graph, edge_ids, r):
        self.vital_edge_ids_ = np.asarray(edge_ids, dtype=np.int64)
        self.vital_edges_ = np.asarray([g.edges[e] for e in edge_ids], dtype=np.int64).reshape(-1, 2)
        self.robustness_ = r
        self.n_nodes_ = g.n
        return self

    def transform(self, X):
        check_is_fitted(self, "vital_edges_")
        g = check_graph(X, self.n_nodes)
        drop = {tuple(e) for e in self.vital_edges_.tolist()}
        kept = [e for e in g.edges if e not in drop]
        return np.asarray(kept, dtype=np.int64).reshape(-1, 2)

    def score(self, X, y=None):
        check_is_fitted(self, "vital_edges_")
        g = check_graph(X, self.n_nodes)
        residual = check_graph(self.transform(g), g.n)
        return -robustness(residual)


class MemeticVitalEdges(_VitalEdgesBase):
    """Vital edges found by the memetic algorithm.

    Parameters
    ----------
    cost : int
        Number of edges to remove.
    population_size : int, default 20
    crossover_prob : float, default 0.8
    local_search_prob : float or None, default None
        ``None`` means ``min(1, 5 / cost)``.
    mu : float, default 0.7
        Weight of the candidate edge's degree disparity in local search.
    generations : int, default 500
    elitism : bool, default True
    n_nodes : int or None
        Node count when ``X`` is an edge array with isolated trailing nodes.
    random_state : int or None

    Attributes
    ----------
    vital_edges_ : ndarray of shape (cost, 2)
    vital_edge_ids_ : ndarray of shape (cost,)
    robustness_ : float
        R of the graph after removing ``vital_edges_``.
    history_ : list of float
        Best R after each generation.
    n_evaluations_ : int
    """

    def __init__(
        self,
        cost=1,
        population_size=20,
        crossover_prob=0.8,
        local_search_prob=None,
        mu=0.7,
        generations=500,
        elitism=True,
        n_nodes=None,
        random_state=None,
    ):
        self.cost = cost
        self.population_size = population_size
        self.crossover_prob = crossover_prob
        self.local_search_prob = local_search_prob
        self.mu = mu
        self.generations = generations
        self.elitism = elitism
        self.n_nodes = n_nodes
        self.random_state = random_state

    def fit(self, X, y=None):
        g = check_graph(X, self.n_nodes)
        params = MAParams(
            cost=check_cost(self.cost, g),
            population_size=self.population_size,
            crossover_prob=self.crossover_prob,
            local_search_prob=self.local_search_prob,
            mu=self.mu,
            generations=self.generations,
            rng_seed=self.random_state,
            elitism=self.elitism,
        )
        report = run_ma(g, params)
        self.history_ = list(report.history)
        self.n_evaluations_ = report.n_evaluations
        return self._finish(g, report.best.edges, report.best_fitness)


class BetweennessVitalEdges(_VitalEdgesBase):
    """Edges chosen by adaptively deleting the highest-betweenness edge.

    ``vital_edge_ids_`` is in deletion order.
    """

    def __init__(self, cost=1, n_nodes=None):
        self.cost = cost
        self.n_nodes = n_nodes

    def fit(self, X, y=None):
        g = check_graph(X, self.n_nodes)
        picked = beas_select(g, check_cost(self.cost, g))
        return self._finish(g, picked, robustness(g, picked))
