"""Deterministic test graphs."""

from __future__ import annotations

import numpy as np

from closedgraphs.graph import ContractViolation, Graph

KINDS = ("path", "cycle", "complete", "claw", "star", "net", "random_unit_interval", "random_gnm")


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise ContractViolation(message)


def random_unit_interval(n: int, length: float, seed: int) -> tuple[Graph, np.ndarray]:
    """Intersection graph of ``[x_v, x_v + length]`` with ``x_v`` uniform on [0, 1).

    Vertex ``v`` owns the ``v``-th draw, so vertex ids are in random
    position order.  Returns the graph and the left endpoints.
    """
    _need(n >= 1 and length > 0, "random_unit_interval needs n >= 1 and length > 0")
    rng = np.random.default_rng(seed)
    x = rng.random(n)
    perm = np.argsort(x, kind="stable")
    xs = x[perm]
    idx = np.arange(n, dtype=np.int64)
    reach = np.searchsorted(xs, xs + length, side="right")
    counts = reach - idx - 1
    src = np.repeat(idx, counts)
    starts = np.cumsum(counts) - counts
    dst = src + 1 + (np.arange(int(counts.sum()), dtype=np.int64) - np.repeat(starts, counts))
    return Graph.from_arrays(n, perm[src] + 1, perm[dst] + 1), x


def random_gnm(n: int, m: int, seed: int) -> Graph:
    total = n * (n - 1) // 2
    _need(n >= 1 and 0 <= m <= total, f"random_gnm needs 0 <= m <= {total}")
    rng = np.random.default_rng(seed)
    if total <= 5_000_000:
        picks = np.sort(rng.choice(total, size=m, replace=False))
        # decode pair index t -> (i, j), i < j, rows of the strict upper triangle
        row_start = np.cumsum(np.arange(n - 1, 0, -1)) - np.arange(n - 1, 0, -1)
        i = np.searchsorted(row_start, picks, side="right") - 1
        j = picks - row_start[i] + i + 1
        return Graph.from_arrays(n, i + 1, j + 1)
    chosen: set[tuple[int, int]] = set()
    while len(chosen) < m:
        a, b = (int(t) for t in rng.integers(1, n + 1, size=2))
        if a != b:
            chosen.add((min(a, b), max(a, b)))
    return Graph.from_edges(n, sorted(chosen))


def generate(kind: str, n: int | None = None, *, m: int | None = None,
             length: float | None = None, seed: int = 0) -> Graph:
    """Build a graph of the given kind; identical arguments give identical graphs.

    ``n`` is the vertex count, except for ``star`` where it is the number of
    leaves.  ``claw`` and ``net`` take no size.
    """
    if kind == "path":
        _need(n is not None and n >= 1, "path needs n >= 1")
        return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])
    if kind == "cycle":
        _need(n is not None and n >= 3, "cycle needs n >= 3")
        return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])
    if kind == "complete":
        _need(n is not None and n >= 1, "complete needs n >= 1")
        return Graph.from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])
    if kind == "claw":
        return generate("star", 3)
    if kind == "star":
        _need(n is not None and n >= 1, "star needs at least one leaf")
        return Graph.from_edges(n + 1, [(1, j) for j in range(2, n + 2)])
    if kind == "net":
        # triangle 1-2-3 with pendant vertices 4, 5, 6
        return Graph.from_edges(6, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)])
    if kind == "random_unit_interval":
        _need(n is not None and length is not None, "random_unit_interval needs n and length")
        return random_unit_interval(n, length, seed)[0]
    if kind == "random_gnm":
        _need(n is not None and m is not None, "random_gnm needs n and m")
        return random_gnm(n, m, seed)
    raise ContractViolation(f"unknown graph kind {kind!r}; expected one of {', '.join(KINDS)}")
