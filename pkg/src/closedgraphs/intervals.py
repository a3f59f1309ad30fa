"""Exact interval representations of closed-labeled graphs.

Vertex ``k`` gets ``I_k = [k, b(k) + k/n]`` where ``b(k)`` is the largest
right end among the facets containing ``k``.  Endpoints are stored
multiplied by the denominator (``n`` for constructed representations), so
every comparison is an integer comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from closedgraphs.cliques import FacetList, facets_of_closed
from closedgraphs.graph import Graph, GraphError, LabeledGraph, ParseError


@dataclass(frozen=True, eq=False)
class IntervalRep:
    """Interval ``k`` is ``[left[k-1] / denom, right[k-1] / denom]``."""

    denom: int
    left: np.ndarray
    right: np.ndarray

    def __post_init__(self) -> None:
        if self.left.shape != self.right.shape:
            raise ValueError("left and right endpoint arrays differ in length")
        if np.any(self.left > self.right):
            raise ValueError("interval with left endpoint beyond right endpoint")

    @property
    def n(self) -> int:
        return int(self.left.size)

    def interval(self, k: int) -> tuple[Fraction, Fraction]:
        return (Fraction(int(self.left[k - 1]), self.denom), Fraction(int(self.right[k - 1]), self.denom))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalRep):
            return NotImplemented
        return (
            self.denom == other.denom
            and np.array_equal(self.left, other.left)
            and np.array_equal(self.right, other.right)
        )


class MalformedFacets(GraphError):
    pass


def compute_b(facets: FacetList, n: int | None = None) -> np.ndarray:
    """``b[k-1] = max{b_i : a_i <= k <= b_i}`` for ``k = 1..n``.

    Sweeps facets by left end keeping the running maximum right end; that
    maximum covers ``k`` exactly when some facet does.
    """
    n = facets.n if n is None else n
    rows = np.array(sorted(facets.facets), dtype=np.int64).reshape(-1, 2)
    k = np.arange(1, n + 1, dtype=np.int64)
    last = np.searchsorted(rows[:, 0], k, side="right") - 1
    running = np.maximum.accumulate(rows[:, 1]) if len(rows) else rows[:, 1]
    out = np.where(last >= 0, running[np.maximum(last, 0)] if len(rows) else 0, 0)
    uncovered = np.flatnonzero(out < k)
    if uncovered.size:
        raise MalformedFacets(f"vertex {int(uncovered[0]) + 1} lies in no facet")
    return out


def build_representation(g: Graph | LabeledGraph) -> IntervalRep:
    """Interval model of a graph that is closed under its labels."""
    if isinstance(g, LabeledGraph):
        g = g.graph
    n = g.n
    b = compute_b(facets_of_closed(g), n)
    k = np.arange(1, n + 1, dtype=np.int64)
    return IntervalRep(n, k * n, b * n + k)


def intersection_graph(rep: IntervalRep) -> Graph:
    """Vertex ``k`` per interval; edges join intersecting closed intervals.

    Sorting by left end makes each vertex's later neighbors a contiguous run,
    found with one binary search, so the cost is O(n log n + m).
    """
    n = rep.n
    perm = np.argsort(rep.left, kind="stable")
    left = rep.left[perm]
    right = rep.right[perm]
    idx = np.arange(n, dtype=np.int64)
    reach = np.searchsorted(left, right, side="right")
    counts = np.maximum(reach - idx - 1, 0)
    total = int(counts.sum())
    src = np.repeat(idx, counts)
    starts = np.cumsum(counts) - counts
    dst = src + 1 + (np.arange(total, dtype=np.int64) - np.repeat(starts, counts))
    return Graph.from_arrays(n, perm[src] + 1, perm[dst] + 1)


def is_proper(rep: IntervalRep) -> bool:
    """True iff no interval properly contains another (identical copies allowed)."""
    pairs = np.unique(np.stack([rep.left, rep.right], axis=1), axis=0)
    if len(pairs) < 2:
        return True
    # by left ascending, right descending: a later interval is contained in
    # an earlier distinct one iff its right end does not exceed the running max
    order = np.lexsort((-pairs[:, 1], pairs[:, 0]))
    right = pairs[order, 1]
    running = np.maximum.accumulate(right)
    return bool(np.all(right[1:] > running[:-1]))


def format_intervals(rep: IntervalRep) -> str:
    return "".join(
        f"{k} {l} {r} {rep.denom}\n"
        for k, (l, r) in enumerate(zip(rep.left.tolist(), rep.right.tolist()), start=1)
    )


def format_intervals_decimal(rep: IntervalRep, digits: int = 6) -> str:
    """Human-readable rendering; the decimals are rounded, not exact."""
    d = rep.denom
    return "".join(
        f"I{k} ~ [{l / d:.{digits}f}, {r / d:.{digits}f}]\n"
        for k, (l, r) in enumerate(zip(rep.left.tolist(), rep.right.tolist()), start=1)
    )


def parse_intervals(text: str) -> IntervalRep:
    """Inverse of :func:`format_intervals`; all lines must share one denominator."""
    rows = []
    denom = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            k, l, r, d = (int(p) for p in parts)
        except ValueError:
            raise ParseError(f"expected 'k left right denom', got {line!r}", lineno) from None
        if denom is None:
            denom = d
        if d != denom or d < 1:
            raise ParseError("inconsistent or nonpositive denominator", lineno)
        if k != len(rows) + 1:
            raise ParseError(f"expected interval {len(rows) + 1}, got {k}", lineno)
        rows.append((l, r))
    if denom is None:
        raise ParseError("no intervals")
    arr = np.array(rows, dtype=np.int64)
    return IntervalRep(denom, arr[:, 0], arr[:, 1])
