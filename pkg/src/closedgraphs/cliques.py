"""Maximal cliques of a closed-labeled graph as integer intervals, and the
clique-vertex incidence matrix with its consecutive-ones check."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from closedgraphs import _kernels
from closedgraphs.closedness import is_closed_labeling
from closedgraphs.graph import ContractViolation, Graph, LabeledGraph

DENSE_LIMIT = 10_000


@dataclass(frozen=True)
class FacetList:
    """Facets ``[a_i, b_i]`` sorted by ``a``; vertex ids are the closed labels."""

    n: int
    facets: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.facets)

    def __len__(self) -> int:
        return len(self.facets)

    def check(self, connected: bool = True) -> None:
        """Assert the sorted-interval shape of the decomposition.

        Consecutive facets overlap when the graph is connected; across
        components they may merely touch.
        """
        f = self.facets
        assert f, "empty facet list"
        assert f[0][0] == 1 and f[-1][1] == self.n
        slack = 0 if connected else 1
        for (a, b), (a2, b2) in zip(f, f[1:]):
            assert a < a2 and b < b2, f"facets not strictly increasing at {(a, b)}, {(a2, b2)}"
            assert a2 <= b + slack, f"gap between {(a, b)} and {(a2, b2)}"
        assert all(a <= b for a, b in f)


def facets_of_closed(g: Graph | LabeledGraph) -> FacetList:
    """Maximal cliques of a graph closed under its own labels, in O(n + m).

    Each vertex ``a`` starts the clique ``[a, r(a)]`` with ``r(a)`` its
    largest neighbor (or ``a``); cliques nested inside the previously kept
    one are dropped.  Components must occupy consecutive labels, which is
    always the case for labelings produced by recognition.
    """
    if isinstance(g, LabeledGraph):
        g = g.graph
    n = g.n
    pos0 = np.arange(n, dtype=np.int64)
    if _kernels.first_noncontiguous(n, g.indptr, g.indices, pos0) >= 0:
        witness = is_closed_labeling(g)
        if witness is not None:
            raise ContractViolation(f"graph is not closed under its labels: {witness}")
        raise ContractViolation("closed labeling splits a component across non-consecutive labels")
    reach = np.arange(1, n + 1, dtype=np.int64)
    has = np.flatnonzero(np.diff(g.indptr) > 0)
    reach[has] = np.maximum(reach[has], g.indices[g.indptr[has + 1] - 1].astype(np.int64) + 1)

    facets: list[tuple[int, int]] = []
    monotone = True
    prev = 0
    for a, r in enumerate(reach.tolist(), start=1):
        if r < prev:
            monotone = False
        if not facets or r > facets[-1][1]:
            facets.append((a, r))
        prev = r
    if not monotone:
        # fall back to a full containment scan
        facets = [
            f for f in facets
            if not any(o != f and o[0] <= f[0] and f[1] <= o[1] for o in facets)
        ]
    return FacetList(n, tuple(facets))


@dataclass(frozen=True)
class IncidenceMatrix:
    """Rows are cliques, columns are vertices ``1..n``.

    Stored densely as a uint8 array when ``n <= DENSE_LIMIT``; otherwise only
    the row intervals are kept.
    """

    n: int
    intervals: tuple[tuple[int, int], ...] | None
    dense: np.ndarray | None

    @classmethod
    def from_dense(cls, rows) -> IncidenceMatrix:
        arr = np.asarray(rows, dtype=np.uint8)
        if arr.ndim != 2:
            raise ValueError("incidence matrix must be two-dimensional")
        return cls(arr.shape[1], None, arr)

    def to_text(self) -> str:
        if self.dense is None:
            raise ValueError("text grid is only available for the dense form")
        return "\n".join(" ".join(map(str, row)) for row in self.dense.tolist()) + "\n"


def incidence_matrix(f: FacetList, n: int | None = None) -> IncidenceMatrix:
    n = f.n if n is None else n
    if n > DENSE_LIMIT:
        return IncidenceMatrix(n, f.facets, None)
    cols = np.arange(1, n + 1)
    dense = np.array(
        [(cols >= a) & (cols <= b) for a, b in f.facets], dtype=np.uint8
    ).reshape(len(f.facets), n)
    return IncidenceMatrix(n, f.facets, dense)


def _lines_contiguous(mat: np.ndarray) -> bool:
    # every line (row of mat) has its ones in one block
    if mat.size == 0:
        return True
    ones = mat.astype(bool)
    count = ones.sum(axis=1)
    width = mat.shape[1]
    first = np.argmax(ones, axis=1)
    last = width - 1 - np.argmax(ones[:, ::-1], axis=1)
    return bool(np.all((count == 0) | (last - first + 1 == count)))


def consecutive_ones(m: IncidenceMatrix) -> bool:
    """Ones contiguous in every row and every column, in the given order."""
    if m.dense is not None:
        return _lines_contiguous(m.dense) and _lines_contiguous(m.dense.T)
    rows = np.array(m.intervals, dtype=np.int64).reshape(-1, 2)
    a, b = rows[:, 0], rows[:, 1]
    if np.all(np.diff(a) > 0) and np.all(np.diff(b) > 0):
        # rows containing k are those with a <= k (a prefix) and b >= k (a suffix)
        return True
    for k in range(1, m.n + 1):
        hit = np.flatnonzero((a <= k) & (k <= b))
        if hit.size and hit[-1] - hit[0] + 1 != hit.size:
            return False
    return True


def format_facets(f: FacetList) -> str:
    return "".join(f"{a} {b}\n" for a, b in f.facets)
