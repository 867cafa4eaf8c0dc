"""Edge-list ingestion, exact oracle, strategy sweeps and CSV output."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .centrality import beas_select
from .evolver import MAParams, run_ma
from .exceptions import ValidationError
from .graph import Graph, robustness, robustness_masked

STRATEGIES = ("ma", "beas", "random")
CSV_HEADER = ("strategy", "cost", "seed", "R", "walltime_ms", "edges")
DEFAULT_ENUMERATION_CAP = 10**6


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    The first non-comment line holds the node count; every further line is a
    whitespace-separated ``u v`` pair. ``#`` starts a comment. Node labels are
    compacted to ``0..n-1`` in order of first appearance; nodes that never
    appear in an edge are isolated and receive the smallest unused integer
    labels.
    """
    n = None
    edges: List[Tuple[int, int]] = []
    ids: Dict[str, int] = {}
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise ValidationError(f"line {lineno}: expected a node count, got {raw!r}")
            try:
                n = int(parts[0])
            except ValueError:
                raise ValidationError(f"line {lineno}: node count is not an integer") from None
            if n < 1:
                raise ValidationError(f"line {lineno}: node count must be >= 1")
            continue
        if len(parts) != 2:
            raise ValidationError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ValidationError(f"line {lineno}: node ids must be integers") from None
        if min(nums) < 0:
            raise ValidationError(f"line {lineno}: node ids must be non-negative")
        labels = [str(x) for x in nums]
        if labels[0] == labels[1]:
            raise ValidationError(f"line {lineno}: self-loop on node {labels[0]}")
        for lab in labels:
            if lab not in ids:
                if len(ids) >= n:
                    raise ValidationError(f"line {lineno}: more than {n} distinct nodes")
                ids[lab] = len(ids)
        u, v = ids[labels[0]], ids[labels[1]]
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValidationError(f"line {lineno}: duplicate edge {parts[0]}-{parts[1]}")
        seen.add(key)
        edges.append((u, v))
    if n is None:
        raise ValidationError("empty edge list: missing node count")
    names = list(ids)
    spare = (str(i) for i in range(10 * n + len(names)) if str(i) not in ids)
    names.extend(next(spare) for _ in range(n - len(names)))
    return Graph(n, edges, labels=names)


def read_edge_list(path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def brute_force_vital_edges(
    g: Graph, cost: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Tuple[Tuple[int, ...], float]:
    """Exact minimiser of R over all ``cost``-subsets of edges.

    Ties resolve to the lexicographically smallest id tuple. Refuses when
    ``binomial(m, cost)`` exceeds ``cap``.
    """
    if not 0 <= cost <= g.m:
        raise ValidationError(f"cost must lie in [0, {g.m}], got {cost}")
    count = comb(g.m, cost)
    if count > cap:
        raise ValidationError(
            f"enumeration needs {count} evaluations, above the cap of {cap}"
        )
    best_set: Tuple[int, ...] = ()
    best_r = None
    alive = np.ones(g.m, dtype=np.bool_)
    for subset in combinations(range(g.m), cost):
        alive[list(subset)] = False
        r = robustness_masked(g, alive)
        alive[list(subset)] = True
        if best_r is None or r < best_r:
            best_set, best_r = subset, r
    return best_set, best_r


@dataclass
class SweepConfig:
    graph: Graph
    strategies: Sequence[str] = ("ma", "beas")
    costs: Sequence[int] = (0,)
    seeds: Sequence[int] = (0,)
    ma_overrides: Dict[str, object] = field(default_factory=dict)

    def validate(self):
        if not self.strategies:
            raise ValidationError("at least one strategy is required")
        for s in self.strategies:
            if s not in STRATEGIES:
                raise ValidationError(f"unknown strategy {s!r}; choose from {STRATEGIES}")
        for c in self.costs:
            if not 0 <= c <= self.graph.m:
                raise ValidationError(f"cost {c} outside [0, {self.graph.m}]")
        if not self.costs:
            raise ValidationError("at least one cost is required")
        if not self.seeds:
            raise ValidationError("at least one seed is required")


@dataclass(frozen=True)
class SweepRow:
    strategy: str
    cost: int
    seed: int
    R: float
    edges: Tuple[int, ...]
    walltime_ms: float


@dataclass
class SweepResult:
    graph: Graph
    rows: List[SweepRow] = field(default_factory=list)

    def sorted_rows(self) -> List[SweepRow]:
        return sorted(self.rows, key=lambda r: (r.strategy, r.cost, r.seed))


def run_sweep(cfg: SweepConfig) -> SweepResult:
    """One row per (strategy, cost, seed); B_EAS runs once per cost with seed 0."""
    cfg.validate()
    g = cfg.graph
    result = SweepResult(g)
    intact = robustness(g)
    costs = sorted(set(int(c) for c in cfg.costs))

    if "beas" in cfg.strategies:
        # the adaptive removal order is a prefix-stable sequence
        t0 = time.perf_counter()
        order = beas_select(g, max(costs))
        per_edge = (time.perf_counter() - t0) * 1e3 / max(1, len(order))
        for c in costs:
            picked = tuple(order[:c])
            r = robustness(g, picked) if c else intact
            result.rows.append(SweepRow("beas", c, 0, r, picked, per_edge * c))

    for strategy in ("ma", "random"):
        if strategy not in cfg.strategies:
            continue
        for c in costs:
            for seed in cfg.seeds:
                t0 = time.perf_counter()
                if c == 0:
                    picked, r = (), intact
                elif strategy == "ma":
                    params = MAParams(cost=c, rng_seed=int(seed), **cfg.ma_overrides)
                    report = run_ma(g, params)
                    picked, r = report.best.edges, report.best_fitness
                else:
                    rng = np.random.default_rng([int(seed), c])
                    picked = tuple(sorted(rng.choice(g.m, size=c, replace=False).tolist()))
                    r = robustness(g, picked)
                ms = (time.perf_counter() - t0) * 1e3
                result.rows.append(SweepRow(strategy, c, int(seed), r, picked, ms))
    return result


def format_csv(res: SweepResult, timing: bool = True) -> str:
    """CSV text; with ``timing=False`` the wall-time column is written as 0."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in res.sorted_rows():
        writer.writerow([
            row.strategy,
            row.cost,
            row.seed,
            f"{row.R:.6f}",
            f"{row.walltime_ms:.3f}" if timing else "0",
            ";".join(res.graph.edge_labels(row.edges)),
        ])
    return buf.getvalue()


def write_csv(res: SweepResult, path, timing: bool = True):
    path = Path(path)
    try:
        path.write_text(format_csv(res, timing=timing))
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def read_csv_rows(text: str) -> List[dict]:
    return list(csv.DictReader(io.StringIO(text)))


def edges_from_labels(g: Graph, field_value: str) -> List[int]:
    """Edge ids for a semicolon-separated ``u-v`` list in external labels."""
    if not field_value:
        return []
    index = {lab: i for i, lab in enumerate(g.labels)}
    out = []
    for item in field_value.split(";"):
        u, v = item.split("-")
        out.append(g.edge_id(index[u], index[v]))
    return out
