"""Edge betweenness and the adaptive highest-betweenness removal baseline."""

from __future__ import annotations

from typing import Iterable, List

import numpy as np

from . import _kernels
from .exceptions import ValidationError
from .graph import Graph

# scores within this relative distance of the maximum count as tied
TIE_RTOL = 1e-9


def edge_betweenness(g: Graph, removed_edges: Iterable[int] = ()) -> np.ndarray:
    """Exact edge betweenness over unordered node pairs.

    Pairs in different components contribute nothing. Edges listed in
    ``removed_edges`` are treated as absent and score 0.

    Returns
    -------
    ndarray of shape (g.m,)
    """
    alive = g.alive_mask(removed_edges)
    return _betweenness(g, alive)


def _betweenness(g: Graph, alive: np.ndarray) -> np.ndarray:
    indptr, nbr, eid = g.csr
    return _kernels.edge_betweenness(g.n, g.m, indptr, nbr, eid, alive) / 2.0


def _argmax_lowest(scores: np.ndarray, alive: np.ndarray) -> int:
    live = np.flatnonzero(alive)
    vals = scores[live]
    top = vals.max()
    tied = live[vals >= top - TIE_RTOL * max(1.0, abs(top))]
    return int(tied[0])


def beas_select(g: Graph, cost: int) -> List[int]:
    """Adaptively delete the highest-betweenness edge ``cost`` times.

    Betweenness is recomputed on the residual graph after every deletion;
    ties go to the lowest edge id.

    Returns
    -------
    list of int
        Edge ids of ``g`` in deletion order.
    """
    cost = int(cost)
    if not 0 <= cost <= g.m:
        raise ValidationError(f"cost must lie in [0, {g.m}], got {cost}")
    alive = np.ones(g.m, dtype=np.bool_)
    picked = []
    for _ in range(cost):
        e = _argmax_lowest(_betweenness(g, alive), alive)
        alive[e] = False
        picked.append(e)
    return picked
