"""Pure-Python/numpy versions of the table kernels."""

from __future__ import annotations

import numpy as np


def closure_bfs(table: np.ndarray, gens: np.ndarray, identity: int) -> np.ndarray:
    """Boolean mask of the subgroup generated by ``gens`` in a Cayley table."""
    n = table.shape[0]
    mask = np.zeros(n, dtype=bool)
    mask[identity] = True
    gens = np.unique(np.asarray(gens, dtype=np.int64))
    if gens.size == 0:
        return mask
    frontier = np.array([identity], dtype=np.int64)
    while frontier.size:
        images = table[frontier[:, None], gens[None, :]].ravel()
        images = np.unique(images)
        images = images[~mask[images]]
        mask[images] = True
        frontier = images
    return mask


def class_labels(conj: np.ndarray) -> np.ndarray:
    """Label each column x by the least element of its conjugacy class.

    ``conj[g, x]`` is g x g^-1.
    """
    n = conj.shape[1]
    labels = np.full(n, -1, dtype=np.int64)
    for x in range(n):
        if labels[x] < 0:
            labels[conj[:, x]] = x
    return labels


def orbit_labels(perms: np.ndarray) -> np.ndarray:
    """Label each point by the least point of its orbit under the rows of ``perms``."""
    perms = np.asarray(perms, dtype=np.int64)
    npts = perms.shape[1]
    parent = np.arange(npts, dtype=np.int64)

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for row in perms:
        for a, b in enumerate(row.tolist()):
            ra, rb = find(a), find(b)
            if ra != rb:
                if ra < rb:
                    parent[rb] = ra
                else:
                    parent[ra] = rb
    return np.array([find(a) for a in range(npts)], dtype=np.int64)
