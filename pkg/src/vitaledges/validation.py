"""Input coercion shared by the estimators."""

from __future__ import annotations

from typing import Optional

import numpy as np

from .exceptions import ValidationError
from .graph import Graph


def check_edge_array(X) -> np.ndarray:
    """Return ``X`` as an ``(m, 2)`` array of non-negative ints."""
    arr = np.asarray(X)
    if arr.size == 0:
        return np.zeros((0, 2), dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValidationError(f"expected an (m, 2) edge array, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.equal(np.mod(arr, 1), 0)):
            raise ValidationError("edge endpoints must be integers")
        arr = arr.astype(np.int64)
    if arr.min() < 0:
        raise ValidationError("edge endpoints must be non-negative")
    return arr.astype(np.int64, copy=False)


def check_graph(X, n_nodes: Optional[int] = None) -> Graph:
    """Coerce a :class:`Graph` or an edge array into a :class:`Graph`.

    For an edge array the node count is ``n_nodes`` when given, else one
    more than the largest endpoint.
    """
    if isinstance(X, Graph):
        if n_nodes is not None and n_nodes != X.n:
            raise ValidationError(f"graph has {X.n} nodes, expected {n_nodes}")
        return X
    arr = check_edge_array(X)
    n = int(arr.max()) + 1 if len(arr) else 1
    if n_nodes is not None:
        if n_nodes < n:
            raise ValidationError(f"n_nodes={n_nodes} but edges reference node {n - 1}")
        n = n_nodes
    return Graph(n, map(tuple, arr.tolist()))


def check_cost(cost, g: Graph) -> int:
    if isinstance(cost, bool) or int(cost) != cost:
        raise ValidationError(f"cost must be an integer, got {cost!r}")
    cost = int(cost)
    if not 0 <= cost <= g.m:
        raise ValidationError(f"cost must lie in [0, {g.m}], got {cost}")
    return cost
