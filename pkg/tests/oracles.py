"""Slow, independent reference implementations used only by the tests."""

from collections import deque
from fractions import Fraction
from itertools import combinations


def adjacency_sets(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def bfs_giant(adj, removed):
    seen = set(removed)
    best = 0
    for s in range(len(adj)):
        if s in seen:
            continue
        seen.add(s)
        q, count = deque([s]), 0
        while q:
            v = q.popleft()
            count += 1
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    q.append(w)
        best = max(best, count)
    return best


def naive_attack(n, edges):
    """Recompute degrees and the giant component from scratch at every step."""
    adj = adjacency_sets(n, edges)
    removed = set()
    order, sizes = [], []
    for _ in range(n):
        deg = {v: sum(1 for w in adj[v] if w not in removed) for v in range(n) if v not in removed}
        top = max(deg.values())
        v = min(u for u, d in deg.items() if d == top)
        removed.add(v)
        order.append(v)
        sizes.append(bfs_giant(adj, removed))
    return order, sizes


def naive_robustness(n, edges):
    return sum(naive_attack(n, edges)[1]) / (n * n)


def all_shortest_paths(adj, s, t):
    """Every shortest s-t path as a node list (BFS layering + enumeration)."""
    dist = {s: 0}
    q = deque([s])
    while q:
        v = q.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                q.append(w)
    if t not in dist:
        return []
    paths = []

    def walk(path):
        v = path[-1]
        if v == s:
            paths.append(path[::-1])
            return
        for w in adj[v]:
            if dist.get(w) == dist[v] - 1:
                walk(path + [w])

    walk([t])
    return paths


def brute_betweenness(n, edges):
    """Exact rational edge betweenness by enumerating all shortest paths."""
    adj = adjacency_sets(n, edges)
    index = {(min(u, v), max(u, v)): i for i, (u, v) in enumerate(edges)}
    score = [Fraction(0)] * len(edges)
    for s, t in combinations(range(n), 2):
        paths = all_shortest_paths(adj, s, t)
        if not paths:
            continue
        share = Fraction(1, len(paths))
        for p in paths:
            for a, b in zip(p, p[1:]):
                score[index[(min(a, b), max(a, b))]] += share
    return score


def random_connected_graph(rng, n, m):
    """Random spanning tree plus extra uniform edges, m clipped to the simple max."""
    m = min(m, n * (n - 1) // 2)
    perm = rng.permutation(n)
    edges = set()
    for i in range(1, n):
        j = int(rng.integers(i))
        u, v = int(perm[i]), int(perm[j])
        edges.add((min(u, v), max(u, v)))
    while len(edges) < m:
        u, v = (int(x) for x in rng.choice(n, 2, replace=False))
        edges.add((min(u, v), max(u, v)))
    return sorted(edges)


def random_tree(rng, n):
    return [(int(rng.integers(i)), i) for i in range(1, n)]


def random_graph(rng, n, p):
    return [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]


def brute_vital(n, edges, cost):
    best = None
    for subset in combinations(range(len(edges)), cost):
        kept = [e for i, e in enumerate(edges) if i not in subset]
        r = naive_robustness(n, kept)
        if best is None or r < best[1]:
            best = (subset, r)
    return best


def tree_split_sizes(n, edges, k):
    adj = adjacency_sets(n, [e for i, e in enumerate(edges) if i != k])
    u = edges[k][0]
    seen = {u}
    q = deque([u])
    while q:
        v = q.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                q.append(w)
    return len(seen), n - len(seen)

