"""Compiled O(n + m) loops over 0-based CSR adjacency."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def component_labels(n, indptr, indices):
    label = np.full(n, -1, dtype=np.int64)
    stack = np.empty(n, dtype=np.int64)
    for s in range(n):
        if label[s] >= 0:
            continue
        label[s] = s
        top = 0
        stack[top] = s
        top += 1
        while top:
            top -= 1
            u = stack[top]
            for e in range(indptr[u], indptr[u + 1]):
                w = indices[e]
                if label[w] < 0:
                    label[w] = s
                    stack[top] = w
                    top += 1
    return label


@njit(cache=True)
def sort_adjacency_by_rank(n, indptr, indices, order):
    """Copy of ``indices`` with every row sorted by position in ``order``.

    Counting-sort style: vertices are scattered into their neighbors' rows
    in ``order`` sequence, so the work is O(n + m).
    """
    out = np.empty_like(indices)
    fill = indptr[:-1].copy()
    for i in range(n):
        u = order[i]
        for e in range(indptr[u], indptr[u + 1]):
            v = indices[e]
            out[fill[v]] = u
            fill[v] += 1
    return out


@njit(cache=True)
def lexbfs(n, indptr, indices, tie):
    """LexBFS by partition refinement; ``tie`` is a 0-based vertex order.

    Classes are doubly linked lists of vertices kept in tie-break order,
    themselves chained in a doubly linked list.  Visiting ``p`` pulls its
    unvisited neighbors out of each class into a fresh class placed in
    front of it.  Because rows are pre-sorted by tie-break rank the pulled
    vertices are appended in rank order, so every class stays sorted and
    its head is the tie-break minimum.
    """
    out = np.empty(n, dtype=np.int64)
    if n == 0:
        return out
    radj = sort_adjacency_by_rank(n, indptr, indices, tie)

    vnext = np.full(n, -1, dtype=np.int64)
    vprev = np.full(n, -1, dtype=np.int64)
    vcls = np.zeros(n, dtype=np.int64)
    visited = np.zeros(n, dtype=np.bool_)

    head = np.full(n + 1, -1, dtype=np.int64)
    tail = np.full(n + 1, -1, dtype=np.int64)
    size = np.zeros(n + 1, dtype=np.int64)
    cnext = np.full(n + 1, -1, dtype=np.int64)
    cprev = np.full(n + 1, -1, dtype=np.int64)
    mark = np.full(n + 1, -1, dtype=np.int64)
    split = np.full(n + 1, -1, dtype=np.int64)
    free = np.empty(n + 1, dtype=np.int64)
    nfree = 0
    for c in range(n, 0, -1):
        free[nfree] = c
        nfree += 1

    # class 0 holds every vertex in tie-break order
    for i in range(n):
        v = tie[i]
        vcls[v] = 0
        if i:
            vprev[v] = tie[i - 1]
            vnext[tie[i - 1]] = v
    head[0] = tie[0]
    tail[0] = tie[n - 1]
    size[0] = n
    first = 0

    for step in range(n):
        c = first
        p = head[c]
        # detach p from the front of c
        head[c] = vnext[p]
        if vnext[p] >= 0:
            vprev[vnext[p]] = -1
        else:
            tail[c] = -1
        size[c] -= 1
        if size[c] == 0:
            first = cnext[c]
            if first >= 0:
                cprev[first] = -1
            cnext[c] = -1
            free[nfree] = c
            nfree += 1
        visited[p] = True
        out[step] = p

        for e in range(indptr[p], indptr[p + 1]):
            w = radj[e]
            if visited[w]:
                continue
            c = vcls[w]
            if mark[c] != step:
                mark[c] = step
                nfree -= 1
                nc = free[nfree]
                head[nc] = -1
                tail[nc] = -1
                size[nc] = 0
                mark[nc] = -1
                # link nc just before c
                cprev[nc] = cprev[c]
                cnext[nc] = c
                if cprev[c] >= 0:
                    cnext[cprev[c]] = nc
                else:
                    first = nc
                cprev[c] = nc
                split[c] = nc
            nc = split[c]
            # unlink w from c
            a = vprev[w]
            b = vnext[w]
            if a >= 0:
                vnext[a] = b
            else:
                head[c] = b
            if b >= 0:
                vprev[b] = a
            else:
                tail[c] = a
            size[c] -= 1
            # append w to nc
            vprev[w] = tail[nc]
            vnext[w] = -1
            if tail[nc] >= 0:
                vnext[tail[nc]] = w
            else:
                head[nc] = w
            tail[nc] = w
            size[nc] += 1
            vcls[w] = nc
            if size[c] == 0:
                # drop the emptied class from the class chain
                a = cprev[c]
                b = cnext[c]
                if a >= 0:
                    cnext[a] = b
                else:
                    first = b
                if b >= 0:
                    cprev[b] = a
                cnext[c] = -1
                cprev[c] = -1
                mark[c] = -1
                free[nfree] = c
                nfree += 1
    return out


@njit(cache=True)
def first_noncontiguous(n, indptr, indices, pos):
    """First vertex (0-based) whose closed neighborhood is not a block of positions, else -1."""
    for v in range(n):
        lo = pos[v]
        hi = pos[v]
        for e in range(indptr[v], indptr[v + 1]):
            p = pos[indices[e]]
            if p < lo:
                lo = p
            elif p > hi:
                hi = p
        if hi - lo != indptr[v + 1] - indptr[v]:
            return v
    return -1


@njit(cache=True)
def _count_between(row, pos, lo, hi):
    # row is sorted by pos; count entries with lo < pos < hi
    a = 0
    b = row.size
    while a < b:
        mid = (a + b) // 2
        if pos[row[mid]] <= lo:
            a = mid + 1
        else:
            b = mid
    start = a
    b = row.size
    while a < b:
        mid = (a + b) // 2
        if pos[row[mid]] < hi:
            a = mid + 1
        else:
            b = mid
    return a - start


@njit(cache=True)
def _adjacent_at(row, pos, target):
    a = 0
    b = row.size
    while a < b:
        mid = (a + b) // 2
        if pos[row[mid]] < target:
            a = mid + 1
        else:
            b = mid
    return a < row.size and pos[row[a]] == target


@njit(cache=True)
def umbrella_triple(n, indptr, indices, order, pos):
    """Lexicographically smallest (pos u, pos w, pos v) violating triple.

    Returns 0-based (u, v, w) or (-1, -1, -1) when the ordering has the
    umbrella property.  ``order`` and ``pos`` are 0-based and mutually
    inverse.
    """
    padj = sort_adjacency_by_rank(n, indptr, indices, order)
    for pu in range(n):
        u = order[pu]
        urow = padj[indptr[u] : indptr[u + 1]]
        k = 0
        for idx in range(urow.size):
            w = urow[idx]
            pw = pos[w]
            if pw < pu:
                continue
            gap = pw - pu - 1
            wrow = padj[indptr[w] : indptr[w + 1]]
            if k != gap or _count_between(wrow, pos, pu, pw) != gap:
                for pv in range(pu + 1, pw):
                    v = order[pv]
                    if not _adjacent_at(urow, pos, pv) or not _adjacent_at(wrow, pos, pv):
                        return u, v, w
            k += 1
    return -1, -1, -1
