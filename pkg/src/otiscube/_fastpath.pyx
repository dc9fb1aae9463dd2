# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled BFS kernels over a CSR adjacency.

Interface twin of ``_fastpath_py``; the package selects whichever is
importable at load time.
"""
import numpy as np

from libc.stdint cimport int32_t, int64_t


cdef Py_ssize_t _bfs_fill(const int64_t[::1] indptr, const int32_t[::1] indices,
                          int32_t source, int32_t[::1] dist,
                          int32_t[::1] queue) noexcept nogil:
    """Fill ``dist`` (pre-set to -1) from ``source``; returns nodes reached.

    Nodes enter ``queue`` in nondecreasing distance order, so the last
    entry's distance is the eccentricity over the reached component.
    """
    cdef Py_ssize_t head = 0, tail = 0
    cdef int32_t u, v, du
    cdef int64_t j
    dist[source] = 0
    queue[tail] = source
    tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if dist[v] < 0:
                dist[v] = du
                queue[tail] = v
                tail += 1
    return tail


def bfs_distances(indptr, indices, source):
    """Hop counts from `source` to every node; -1 where unreachable."""
    cdef Py_ssize_t node_total = len(indptr) - 1
    dist_arr = np.full(node_total, -1, dtype=np.int32)
    queue_arr = np.empty(node_total, dtype=np.int32)
    _bfs_fill(indptr, indices, source, dist_arr, queue_arr)
    return dist_arr


def all_eccentricities(indptr, indices):
    """Max BFS distance from every node; -1 flags a disconnected source."""
    cdef Py_ssize_t node_total = len(indptr) - 1
    cdef const int64_t[::1] ptr = indptr
    cdef const int32_t[::1] idx = indices
    dist_arr = np.empty(node_total, dtype=np.int32)
    queue_arr = np.empty(node_total, dtype=np.int32)
    eccs_arr = np.empty(node_total, dtype=np.int32)
    cdef int32_t[::1] dist = dist_arr
    cdef int32_t[::1] queue = queue_arr
    cdef int32_t[::1] eccs = eccs_arr
    cdef Py_ssize_t source, i, reached
    with nogil:
        for source in range(node_total):
            for i in range(node_total):
                dist[i] = -1
            reached = _bfs_fill(ptr, idx, <int32_t> source, dist, queue)
            if reached == node_total:
                eccs[source] = dist[queue[reached - 1]]
            else:
                eccs[source] = -1
    return eccs_arr
