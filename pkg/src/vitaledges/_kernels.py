"""Compiled inner loops for the attack simulation and edge betweenness.

All kernels work on a CSR adjacency (``indptr``, ``nbr``, ``eid``) where
``eid[k]`` is the edge id of the half-edge ``nbr[k]``, and on an ``alive``
mask over edge ids so that removal sets never require rebuilding a graph.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _better(deg, a, b):
    # higher degree wins, equal degree goes to the lower node id
    if a < 0:
        return b
    if b < 0:
        return a
    if deg[a] > deg[b]:
        return a
    if deg[b] > deg[a]:
        return b
    return a if a < b else b


@njit(cache=True)
def attack(n, indptr, nbr, eid, alive):
    """Degree-adaptive attack.

    Returns ``(order, sizes)`` where ``sizes[q]`` is the giant component
    size after the first ``q + 1`` nodes of ``order`` are removed.
    """
    deg = np.zeros(n, np.int64)
    for v in range(n):
        d = 0
        for k in range(indptr[v], indptr[v + 1]):
            if alive[eid[k]]:
                d += 1
        deg[v] = d

    # max segment tree over node ids, leaves hold the node id or -1
    size = 1
    while size < n:
        size *= 2
    tree = np.full(2 * size, -1, np.int64)
    for v in range(n):
        tree[size + v] = v
    for i in range(size - 1, 0, -1):
        tree[i] = _better(deg, tree[2 * i], tree[2 * i + 1])

    removed = np.zeros(n, np.bool_)
    order = np.empty(n, np.int64)
    for q in range(n):
        v = tree[1]
        order[q] = v
        removed[v] = True
        i = size + v
        tree[i] = -1
        i //= 2
        while i >= 1:
            tree[i] = _better(deg, tree[2 * i], tree[2 * i + 1])
            i //= 2
        for k in range(indptr[v], indptr[v + 1]):
            w = nbr[k]
            if alive[eid[k]] and not removed[w]:
                deg[w] -= 1
                i = (size + w) // 2
                while i >= 1:
                    tree[i] = _better(deg, tree[2 * i], tree[2 * i + 1])
                    i //= 2

    # rebuild backwards: re-insert nodes in reverse removal order
    parent = np.arange(n)
    csize = np.ones(n, np.int64)
    present = np.zeros(n, np.bool_)
    sizes = np.zeros(n, np.int64)
    best = 0
    for q in range(n - 1, 0, -1):
        v = order[q]
        present[v] = True
        if best < 1:
            best = 1
        for k in range(indptr[v], indptr[v + 1]):
            w = nbr[k]
            if not alive[eid[k]] or not present[w]:
                continue
            a = v
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            b = w
            while parent[b] != b:
                parent[b] = parent[parent[b]]
                b = parent[b]
            if a == b:
                continue
            if csize[a] < csize[b]:
                a, b = b, a
            parent[b] = a
            csize[a] += csize[b]
            if csize[a] > best:
                best = csize[a]
        sizes[q - 1] = best
    return order, sizes


@njit(cache=True)
def giant_sum(n, indptr, nbr, eid, alive):
    _, sizes = attack(n, indptr, nbr, eid, alive)
    return sizes.sum()


@njit(cache=True)
def edge_betweenness(n, m, indptr, nbr, eid, alive):
    """Brandes accumulation over every source, ordered pairs counted twice."""
    score = np.zeros(m)
    dist = np.empty(n, np.int64)
    sigma = np.empty(n)
    delta = np.empty(n)
    stack = np.empty(n, np.int64)
    for s in range(n):
        dist[:] = -1
        sigma[:] = 0.0
        delta[:] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        stack[0] = s
        head = 0
        tail = 1
        while head < tail:
            v = stack[head]
            head += 1
            for k in range(indptr[v], indptr[v + 1]):
                if not alive[eid[k]]:
                    continue
                w = nbr[k]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    stack[tail] = w
                    tail += 1
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
        for j in range(tail - 1, 0, -1):
            w = stack[j]
            coeff = (1.0 + delta[w]) / sigma[w]
            for k in range(indptr[w], indptr[w + 1]):
                e = eid[k]
                if not alive[e]:
                    continue
                v = nbr[k]
                if dist[v] == dist[w] - 1:
                    c = sigma[v] * coeff
                    score[e] += c
                    delta[v] += c
    return score
