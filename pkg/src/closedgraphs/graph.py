"""Simple undirected graphs on vertices 1..n, vertex orderings and relabeling.

Adjacency is kept in CSR form (two numpy arrays) so that graphs with
millions of edges fit in memory.  Vertex ids are 1-based on the public
surface; the CSR arrays are 0-based internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, TextIO

import numpy as np


class GraphError(ValueError):
    """Base class for malformed graph input."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class SelfLoopError(ParseError):
    pass


class VertexRangeError(ParseError):
    pass


class ContractViolation(ValueError):
    """A precondition of an operation does not hold."""


class Graph:
    """Immutable simple graph on ``1..n``.

    ``indptr`` and ``indices`` describe 0-based CSR adjacency with every
    neighbor list strictly increasing.  Build instances with
    :meth:`from_edges` or :meth:`from_arrays`.
    """

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        self.n = int(n)
        self.indptr = indptr
        self.indices = indices
        indptr.flags.writeable = False
        indices.flags.writeable = False

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        arr = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        return cls.from_arrays(n, arr[:, 0], arr[:, 1])

    @classmethod
    def from_arrays(cls, n: int, u: np.ndarray, v: np.ndarray) -> Graph:
        """Build from parallel arrays of 1-based endpoints; duplicates collapse."""
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        if u.shape != v.shape:
            raise GraphError("endpoint arrays differ in length")
        if u.size:
            if np.any(u == v):
                k = int(np.flatnonzero(u == v)[0])
                raise GraphError(f"self-loop at vertex {int(u[k])}")
            lo = min(int(u.min()), int(v.min()))
            hi = max(int(u.max()), int(v.max()))
            if lo < 1 or hi > n:
                raise GraphError(f"vertex id out of range 1..{n}")
        # both directions, 0-based, sorted by (source, target)
        src = np.concatenate([u, v]) - 1
        dst = np.concatenate([v, u]) - 1
        keys = np.unique(src * max(n, 1) + dst)
        src = keys // max(n, 1)
        dst = keys - src * max(n, 1)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        return cls(n, indptr, dst.astype(np.int32))

    @property
    def m(self) -> int:
        return int(self.indices.size // 2)

    def degree(self, v: int) -> int:
        return int(self.indptr[v] - self.indptr[v - 1])

    def neighbors(self, v: int) -> list[int]:
        """Sorted 1-based neighbors of ``v``."""
        return (self.indices[self.indptr[v - 1] : self.indptr[v]] + 1).tolist()

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        # index 0 is a placeholder so that adj[v] works with 1-based ids
        out = [frozenset()]
        for v in range(1, self.n + 1):
            out.append(frozenset(self.neighbors(v)))
        return tuple(out)

    def has_edge(self, u: int, v: int) -> bool:
        row = self.indices[self.indptr[u - 1] : self.indptr[u]]
        k = np.searchsorted(row, v - 1)
        return bool(k < row.size and row[k] == v - 1)

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """1-based endpoint arrays (u < v) in lexicographic order."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.indptr))
        dst = self.indices.astype(np.int64)
        keep = src < dst
        return src[keep] + 1, dst[keep] + 1

    def edges(self) -> list[tuple[int, int]]:
        u, v = self.edge_arrays()
        return list(zip(u.tolist(), v.tolist()))

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def check(self) -> None:
        """Raise AssertionError if any structural invariant is broken."""
        assert self.indptr.size == self.n + 1 and self.indptr[0] == 0
        assert self.indptr[-1] == self.indices.size
        assert self.indices.size % 2 == 0
        for v in range(self.n):
            row = self.indices[self.indptr[v] : self.indptr[v + 1]]
            assert np.all(np.diff(row) > 0), f"adjacency of {v + 1} not strictly increasing"
            assert not np.any(row == v), f"self-loop at {v + 1}"
        src = np.repeat(np.arange(self.n), np.diff(self.indptr))
        fwd = np.sort(src * max(self.n, 1) + self.indices)
        rev = np.sort(self.indices.astype(np.int64) * max(self.n, 1) + src)
        assert np.array_equal(fwd, rev), "adjacency not symmetric"

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        from closedgraphs._kernels import component_labels

        labels = component_labels(self.n, self.indptr, self.indices)
        order = np.argsort(labels, kind="stable")
        bounds = np.flatnonzero(np.diff(labels[order])) + 1
        return [(chunk + 1).tolist() for chunk in np.split(order, bounds)] if self.n else []

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def subgraph(self, vertices: list[int]) -> Graph:
        """Induced subgraph; ``vertices[i]`` becomes vertex ``i + 1``."""
        index = {v: i + 1 for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[w])
            for u in vertices
            for w in self.neighbors(u)
            if u < w and w in index
        ]
        return Graph.from_edges(len(vertices), edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.indices.tobytes()))

    def __repr__(self) -> str:
        if self.m <= 12:
            return f"Graph(n={self.n}, edges={self.edges()})"
        return f"Graph(n={self.n}, m={self.m})"


class VertexOrdering:
    """A permutation of ``1..n``.

    ``order[i]`` is the vertex at (1-based) position ``i + 1`` and
    ``pos[v]`` is the 1-based position of vertex ``v`` (``pos[0]`` unused).
    Used as a labeling, vertex ``v`` receives the new label ``pos[v]``.
    """

    __slots__ = ("order", "pos")

    def __init__(self, order: Iterable[int] | np.ndarray):
        arr = np.array(order, dtype=np.int64).reshape(-1)
        n = arr.size
        pos = np.zeros(n + 1, dtype=np.int64)
        if n:
            if arr.min() < 1 or arr.max() > n:
                raise ContractViolation(f"ordering is not a permutation of 1..{n}")
            pos[arr] = np.arange(1, n + 1)
            if np.count_nonzero(pos[1:]) != n:
                raise ContractViolation(f"ordering is not a permutation of 1..{n}")
        arr.flags.writeable = False
        pos.flags.writeable = False
        self.order = arr
        self.pos = pos

    @classmethod
    def identity(cls, n: int) -> VertexOrdering:
        return cls(np.arange(1, n + 1))

    @property
    def n(self) -> int:
        return int(self.order.size)

    def inverse(self) -> VertexOrdering:
        return VertexOrdering(self.pos[1:])

    def reversed(self) -> VertexOrdering:
        return VertexOrdering(self.order[::-1])

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self.order.tolist())

    def __iter__(self) -> Iterator[int]:
        return iter(self.order.tolist())

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexOrdering):
            return NotImplemented
        return np.array_equal(self.order, other.order)

    def __hash__(self) -> int:
        return hash(self.order.tobytes())

    def __repr__(self) -> str:
        if self.n <= 20:
            return f"VertexOrdering({self.as_tuple()})"
        return f"VertexOrdering(n={self.n})"


@dataclass(frozen=True)
class LabeledGraph:
    """``graph`` is the relabeled graph; ``labeling`` maps original vertex v to label pos[v]."""

    graph: Graph
    labeling: VertexOrdering

    def __post_init__(self) -> None:
        if self.labeling.n != self.graph.n:
            raise ContractViolation("labeling size does not match graph")

    def label_of(self, v: int) -> int:
        return int(self.labeling.pos[v])


def apply_labeling(g: Graph, sigma: VertexOrdering) -> Graph:
    """Rename every vertex ``v`` of ``g`` to ``sigma.pos[v]``."""
    if sigma.n != g.n:
        raise ContractViolation(f"ordering has {sigma.n} vertices, graph has {g.n}")
    u, v = g.edge_arrays()
    return Graph.from_arrays(g.n, sigma.pos[u], sigma.pos[v])


def parse_edge_list(text: str | TextIO) -> Graph:
    """Parse ``u v`` lines with an optional ``n <k>`` header.

    Blank lines and ``#`` comments are skipped; repeated edges collapse.
    """
    if not isinstance(text, str):
        text = text.read()
    declared: int | None = None
    us: list[int] = []
    vs: list[int] = []
    top = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if len(tokens) != 2 or not tokens[1].isdigit() or int(tokens[1]) < 1:
                raise ParseError(f"bad header {line!r}", lineno)
            if declared is not None or us:
                raise ParseError("header must precede all edges and appear once", lineno)
            declared = int(tokens[1])
            continue
        if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
            raise ParseError(f"expected two positive integers, got {line!r}", lineno)
        a, b = int(tokens[0]), int(tokens[1])
        if a < 1 or b < 1:
            raise ParseError(f"vertex ids must be positive, got {line!r}", lineno)
        if a == b:
            raise SelfLoopError(f"self-loop at vertex {a}", lineno)
        if declared is not None and max(a, b) > declared:
            raise VertexRangeError(f"vertex {max(a, b)} exceeds declared n={declared}", lineno)
        us.append(a)
        vs.append(b)
        top = max(top, a, b)
    n = declared if declared is not None else top
    if n == 0:
        raise ParseError("empty graph: no edges and no header")
    return Graph.from_arrays(n, np.array(us, dtype=np.int64), np.array(vs, dtype=np.int64))


def format_edge_list(g: Graph) -> str:
    """Canonical serialization: header, then edges in lexicographic order."""
    u, v = g.edge_arrays()
    lines = [f"n {g.n}"]
    lines.extend(f"{a} {b}" for a, b in zip(u.tolist(), v.tolist()))
    return "\n".join(lines) + "\n"
