"""Pure-Python BFS kernels over a CSR adjacency.

Mirrors the compiled extension's interface exactly; selected as the
fallback when the extension is not built.  Works on plain lists
internally because element access on small Python ints is considerably
faster than on array scalars.
"""
from __future__ import annotations

import numpy as np


def _as_lists(indptr, indices):
    return list(indptr), list(indices)


def bfs_distances(indptr, indices, source: int) -> np.ndarray:
    """Hop counts from `source` to every node; -1 where unreachable."""
    ptr, idx = _as_lists(indptr, indices)
    node_total = len(ptr) - 1
    dist = [-1] * node_total
    dist[source] = 0
    frontier = [source]
    level = 0
    while frontier:
        level += 1
        nxt = []
        for u in frontier:
            for j in range(ptr[u], ptr[u + 1]):
                v = idx[j]
                if dist[v] < 0:
                    dist[v] = level
                    nxt.append(v)
        frontier = nxt
    return np.asarray(dist, dtype=np.int32)


def all_eccentricities(indptr, indices) -> np.ndarray:
    """Max BFS distance from every node; -1 flags a disconnected source."""
    ptr, idx = _as_lists(indptr, indices)
    node_total = len(ptr) - 1
    eccs = np.empty(node_total, dtype=np.int32)
    for source in range(node_total):
        dist = [-1] * node_total
        dist[source] = 0
        frontier = [source]
        level = 0
        ecc = 0
        reached = 1
        while frontier:
            level += 1
            nxt = []
            for u in frontier:
                for j in range(ptr[u], ptr[u + 1]):
                    v = idx[j]
                    if dist[v] < 0:
                        dist[v] = level
                        nxt.append(v)
            if nxt:
                ecc = level
                reached += len(nxt)
            frontier = nxt
        eccs[source] = ecc if reached == node_total else -1
    return eccs
