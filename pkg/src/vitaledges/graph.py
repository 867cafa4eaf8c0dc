"""Undirected simple graphs, the degree-adaptive attack and robustness R."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from . import _kernels
from .exceptions import ValidationError

Edge = Tuple[int, int]


class Graph:
    """Immutable undirected simple graph on nodes ``0..n-1``.

    Edges are canonicalised as ``(min, max)`` and identified by their index
    in :attr:`edges`.

    Parameters
    ----------
    n : int
        Number of nodes, at least 1.
    edges : iterable of (int, int)
        Node pairs. Self-loops and duplicates raise :class:`ValidationError`.
    labels : sequence of str, optional
        External node labels, used when writing edges back out. Defaults to
        the decimal node ids.
    origin : sequence of int, optional
        For each edge, the id it had in the graph this one was derived from.
        Defaults to the identity.
    """

    __slots__ = ("n", "edges", "labels", "origin", "_csr", "_degree", "_index")

    def __init__(
        self,
        n: int,
        edges: Iterable[Edge],
        labels: Optional[Sequence[str]] = None,
        origin: Optional[Sequence[int]] = None,
    ):
        n = int(n)
        if n < 1:
            raise ValidationError(f"node count must be >= 1, got {n}")
        canon = []
        index = {}
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValidationError(f"self-loop on node {u}")
            e = (u, v) if u < v else (v, u)
            if e in index:
                raise ValidationError(f"duplicate edge {e}")
            index[e] = len(canon)
            canon.append(e)
        if labels is None:
            labels = [str(i) for i in range(n)]
        if len(labels) != n:
            raise ValidationError("labels must have one entry per node")
        if origin is None:
            origin = range(len(canon))
        if len(origin) != len(canon):
            raise ValidationError("origin must have one entry per edge")
        self.n = n
        self.edges: Tuple[Edge, ...] = tuple(canon)
        self.labels: Tuple[str, ...] = tuple(str(x) for x in labels)
        self.origin: Tuple[int, ...] = tuple(int(x) for x in origin)
        self._index = index
        self._csr = None
        self._degree = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> int:
        """Id of the edge joining ``u`` and ``v``; ``KeyError`` if absent."""
        return self._index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    @property
    def csr(self):
        """``(indptr, nbr, eid)`` arrays; neighbours are sorted per node."""
        if self._csr is None:
            n, m = self.n, self.m
            if m:
                arr = np.asarray(self.edges, dtype=np.int64)
                ids = np.arange(m, dtype=np.int64)
                src = np.concatenate([arr[:, 0], arr[:, 1]])
                dst = np.concatenate([arr[:, 1], arr[:, 0]])
                eid = np.concatenate([ids, ids])
            else:
                src = dst = eid = np.zeros(0, dtype=np.int64)
            order = np.lexsort((dst, src))
            counts = np.bincount(src, minlength=n)
            indptr = np.zeros(n + 1, dtype=np.int64)
            np.cumsum(counts, out=indptr[1:])
            self._csr = (indptr, dst[order].copy(), eid[order].copy())
        return self._csr

    @property
    def degree(self) -> np.ndarray:
        if self._degree is None:
            self._degree = np.diff(self.csr[0])
        return self._degree

    def neighbors(self, v: int) -> np.ndarray:
        indptr, nbr, _ = self.csr
        return nbr[indptr[v]:indptr[v + 1]]

    @property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(w) for w in self.neighbors(v)) for v in range(self.n))

    def alive_mask(self, removed: Iterable[int] = ()) -> np.ndarray:
        mask = np.ones(self.m, dtype=np.bool_)
        for e in removed:
            mask[e] = False
        return mask

    def edge_labels(self, edge_ids: Iterable[int]) -> list:
        """``u-v`` strings in external labels for the given edge ids."""
        return [f"{self.labels[u]}-{self.labels[v]}" for u, v in (self.edges[e] for e in edge_ids)]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class AttackTrace:
    """Outcome of a degree-adaptive attack.

    ``sizes[Q-1]`` is the giant component node count after ``Q`` removals and
    ``s`` the same quantity as a fraction of the original node count.
    """

    n: int
    removal_order: Tuple[int, ...]
    sizes: Tuple[int, ...]

    @property
    def s(self) -> Tuple[float, ...]:
        return tuple(x / self.n for x in self.sizes)

    @property
    def robustness(self) -> float:
        return sum(self.sizes) / (self.n * self.n)


def giant_component_size(g: Graph, removed=None) -> int:
    """Node count of the largest component among non-removed nodes.

    ``removed`` is a boolean mask of length ``g.n`` or an iterable of ids.
    """
    gone = np.zeros(g.n, dtype=bool)
    if removed is not None:
        removed = np.asarray(removed)
        if removed.dtype == bool:
            gone |= removed
        else:
            gone[removed.astype(np.int64)] = True
    seen = gone.copy()
    best = 0
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        count = 0
        while queue:
            v = queue.popleft()
            count += 1
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        best = max(best, count)
    return best


def _check_removed(g: Graph, edge_ids) -> list:
    ids = [int(e) for e in edge_ids]
    for e in ids:
        if not 0 <= e < g.m:
            raise ValidationError(f"unknown edge id {e} (graph has {g.m} edges)")
    if len(set(ids)) != len(ids):
        raise ValidationError("edge ids must be distinct")
    return ids


def degree_adaptive_attack(g: Graph, removed_edges: Iterable[int] = ()) -> AttackTrace:
    """Remove a current maximum-degree node (lowest id on ties) ``n`` times.

    ``removed_edges`` optionally runs the attack on ``g`` minus those edges
    without materialising the residual graph.
    """
    alive = g.alive_mask(_check_removed(g, removed_edges))
    indptr, nbr, eid = g.csr
    order, sizes = _kernels.attack(g.n, indptr, nbr, eid, alive)
    return AttackTrace(g.n, tuple(int(v) for v in order), tuple(int(x) for x in sizes))


def robustness(g: Graph, removed_edges: Iterable[int] = ()) -> float:
    """Robustness ``R = (1/n) sum_Q s(Q)`` under the degree-adaptive attack."""
    alive = g.alive_mask(_check_removed(g, removed_edges))
    return robustness_masked(g, alive)


def robustness_masked(g: Graph, alive: np.ndarray) -> float:
    """``robustness`` for a precomputed edge-alive mask (no validation)."""
    indptr, nbr, eid = g.csr
    total = _kernels.giant_sum(g.n, indptr, nbr, eid, alive)
    return int(total) / (g.n * g.n)


def remove_edges(g: Graph, edge_ids: Iterable[int]) -> Graph:
    """New graph without the given edges; ``origin`` maps back to ``g``'s ids."""
    drop = set(_check_removed(g, edge_ids))
    keep = [e for e in range(g.m) if e not in drop]
    return Graph(
        g.n,
        [g.edges[e] for e in keep],
        labels=g.labels,
        origin=[g.origin[e] for e in keep],
    )
