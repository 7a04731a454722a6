# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the table kernels."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def closure_bfs(cnp.int64_t[:, :] table, gens, Py_ssize_t identity):
    cdef Py_ssize_t n = table.shape[0]
    cdef cnp.int64_t[:] g = np.unique(np.asarray(gens, dtype=np.int64))
    cdef Py_ssize_t ng = g.shape[0]
    mask_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.uint8_t[:] mask = mask_arr
    queue_arr = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[:] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 1, k
    cdef cnp.int64_t x, y
    mask[identity] = 1
    queue[0] = identity
    while head < tail:
        x = queue[head]
        head += 1
        for k in range(ng):
            y = table[x, g[k]]
            if not mask[y]:
                mask[y] = 1
                queue[tail] = y
                tail += 1
    return mask_arr.astype(bool)


def class_labels(cnp.int64_t[:, :] conj):
    cdef Py_ssize_t ng = conj.shape[0], n = conj.shape[1]
    labels_arr = np.full(n, -1, dtype=np.int64)
    cdef cnp.int64_t[:] labels = labels_arr
    cdef Py_ssize_t x, g
    for x in range(n):
        if labels[x] < 0:
            for g in range(ng):
                labels[conj[g, x]] = x
    return labels_arr


cdef inline Py_ssize_t _find(cnp.int64_t[:] parent, Py_ssize_t a):
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def orbit_labels(cnp.int64_t[:, :] perms):
    cdef Py_ssize_t nr = perms.shape[0], npts = perms.shape[1]
    parent_arr = np.arange(npts, dtype=np.int64)
    cdef cnp.int64_t[:] parent = parent_arr
    cdef Py_ssize_t r, a, ra, rb
    for r in range(nr):
        for a in range(npts):
            ra = _find(parent, a)
            rb = _find(parent, perms[r, a])
            if ra < rb:
                parent[rb] = ra
            elif rb < ra:
                parent[ra] = rb
    for a in range(npts):
        parent[a] = _find(parent, a)
    return parent_arr
