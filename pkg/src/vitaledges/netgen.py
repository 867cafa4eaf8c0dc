"""Barabási–Albert benchmark graphs and small analytic fixtures."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from .exceptions import ValidationError
from .graph import Graph

# 1-based edges of the 10-node toy network that can be read off its text
TOY16_EDGES = (
    (1, 3), (1, 4), (1, 10), (2, 3), (2, 4), (2, 5), (2, 7), (2, 8),
    (2, 10), (4, 6), (4, 8), (4, 9), (5, 6), (5, 7), (7, 9), (8, 10),
)


@dataclass(frozen=True)
class BAParams:
    n_final: int = 1000
    m: int = 2
    m0: int = 2
    seed: Optional[int] = 0

    def validate(self):
        if not (1 <= self.m <= self.m0 <= self.n_final):
            raise ValidationError(
                f"need 1 <= m <= m0 <= n_final, got m={self.m}, m0={self.m0}, "
                f"n_final={self.n_final}"
            )


def ba_network(p: BAParams = BAParams()) -> Graph:
    """Grow a preferential-attachment graph.

    Starts from a path on ``m0`` nodes. Each arriving node links to ``m``
    distinct existing nodes drawn with probability proportional to degree;
    a draw that repeats a target within the same step is redrawn. The graph
    has ``m0 - 1 + m * (n_final - m0)`` edges.
    """
    p.validate()
    rng = np.random.default_rng(p.seed)
    edges = [(i, i + 1) for i in range(p.m0 - 1)]
    # each node appears once per incident edge
    stubs = [v for e in edges for v in e]
    for new in range(p.m0, p.n_final):
        targets = []
        while len(targets) < p.m:
            if stubs:
                t = stubs[rng.integers(len(stubs))]
            else:
                t = int(rng.integers(new))
            if t not in targets:
                targets.append(t)
        for t in targets:
            edges.append((t, new))
            stubs.extend((t, new))
    return Graph(p.n_final, edges)


def complete_graph(k: int) -> Graph:
    return Graph(k, combinations(range(k), 2))


def fixture(name: str) -> Graph:
    """Named analytic fixture.

    One of ``triangle``, ``path4``, ``star4`` (hub 0), ``complete(k)`` or
    ``toy16``.
    """
    if name == "triangle":
        return complete_graph(3)
    if name == "path4":
        return Graph(4, [(0, 1), (1, 2), (2, 3)])
    if name == "star4":
        return Graph(4, [(0, 1), (0, 2), (0, 3)])
    if name == "toy16":
        return Graph(
            10,
            [(u - 1, v - 1) for u, v in TOY16_EDGES],
            labels=[str(i) for i in range(1, 11)],
        )
    match = re.fullmatch(r"complete\((\d+)\)", name)
    if match:
        return complete_graph(int(match.group(1)))
    raise ValidationError(f"unknown fixture {name!r}")
