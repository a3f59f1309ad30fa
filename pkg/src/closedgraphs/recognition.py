"""Proper interval recognition with three LexBFS sweeps.

The first sweep breaks ties by vertex id.  Each later sweep starts from
the last vertex of the previous one and prefers, among tied vertices, the
one appearing latest in the previous sweep.  The third ordering is then
checked for the umbrella property; a failure yields a concrete triple.
"""

from __future__ import annotations

from dataclasses import dataclass

from closedgraphs import _kernels
from closedgraphs.graph import ContractViolation, Graph, LabeledGraph, VertexOrdering, apply_labeling


@dataclass(frozen=True)
class UmbrellaViolation:
    """``pos(u) < pos(v) < pos(w)``, ``{u, w}`` is an edge but ``missing_edge`` is not."""

    u: int
    v: int
    w: int
    missing_edge: tuple[int, int]

    @property
    def present_edge(self) -> tuple[int, int]:
        return (self.u, self.w)

    def verify(self, g: Graph, sigma: VertexOrdering) -> bool:
        """Re-check the certificate against ``g`` from scratch."""
        pos = sigma.pos
        a, b = self.missing_edge
        return (
            pos[self.u] < pos[self.v] < pos[self.w]
            and g.has_edge(self.u, self.w)
            and {a, b} in ({self.u, self.v}, {self.v, self.w})
            and not g.has_edge(a, b)
        )


class UmbrellaError(ContractViolation):
    def __init__(self, violation: UmbrellaViolation):
        self.violation = violation
        super().__init__(f"ordering lacks the umbrella property: {violation}")


@dataclass(frozen=True)
class RecognitionResult:
    ordering: VertexOrdering | None
    violation: UmbrellaViolation | None
    final_sweep: VertexOrdering

    @property
    def is_proper_interval(self) -> bool:
        return self.ordering is not None


def _check_tie_break(g: Graph, sigma: VertexOrdering) -> None:
    if sigma.n != g.n:
        raise ContractViolation(f"ordering has {sigma.n} vertices, graph has {g.n}")


def lexbfs(g: Graph, tie_break: VertexOrdering | None = None) -> VertexOrdering:
    """Lexicographic BFS visit order; ties go to the earliest vertex in ``tie_break``."""
    if tie_break is None:
        tie_break = VertexOrdering.identity(g.n)
    _check_tie_break(g, tie_break)
    out = _kernels.lexbfs(g.n, g.indptr, g.indices, tie_break.order - 1)
    return VertexOrdering(out + 1)


def lexbfs_plus(g: Graph, prev: VertexOrdering) -> VertexOrdering:
    """LexBFS starting at the last vertex of ``prev``, ties to the latest vertex in ``prev``."""
    return lexbfs(g, prev.reversed())


def umbrella_check(g: Graph, sigma: VertexOrdering) -> UmbrellaViolation | None:
    """None if ``sigma`` has the umbrella property, else the smallest violating triple.

    The fast path asks whether every closed neighborhood occupies a block of
    consecutive positions.  Triples are only searched for once that fails,
    minimizing (pos u, pos w, pos v) lexicographically.
    """
    _check_tie_break(g, sigma)
    pos0 = sigma.pos[1:] - 1
    if _kernels.first_noncontiguous(g.n, g.indptr, g.indices, pos0) < 0:
        return None
    u, v, w = _kernels.umbrella_triple(g.n, g.indptr, g.indices, sigma.order - 1, pos0)
    if u < 0:
        raise AssertionError("contiguity failed but no violating triple found")
    u, v, w = int(u) + 1, int(v) + 1, int(w) + 1
    missing = (u, v) if not g.has_edge(u, v) else (v, w)
    return UmbrellaViolation(u, v, w, missing)


def recognize_proper_interval(g: Graph) -> RecognitionResult:
    """Three-sweep recognition; the ordering returned satisfies the umbrella property.

    Sweeps run on the whole graph: LexBFS never interleaves components, so
    this equals processing components separately and concatenating them.
    """
    s1 = lexbfs(g)
    s2 = lexbfs_plus(g, s1)
    s3 = lexbfs_plus(g, s2)
    violation = umbrella_check(g, s3)
    if violation is None:
        return RecognitionResult(s3, None, s3)
    return RecognitionResult(None, violation, s3)


def ordering_to_closed_labeling(g: Graph, sigma: VertexOrdering) -> LabeledGraph:
    """Relabel ``g`` so that the vertex at position i becomes vertex i."""
    violation = umbrella_check(g, sigma)
    if violation is not None:
        raise UmbrellaError(violation)
    return LabeledGraph(apply_labeling(g, sigma), sigma)


__all__ = [
    "RecognitionResult",
    "UmbrellaError",
    "UmbrellaViolation",
    "lexbfs",
    "lexbfs_plus",
    "ordering_to_closed_labeling",
    "recognize_proper_interval",
    "umbrella_check",
]
