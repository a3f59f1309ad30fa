"""The closed-labeling predicate, an exhaustive labeling search and claw detection."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from closedgraphs.graph import ContractViolation, Graph, VertexOrdering, apply_labeling

DEFAULT_BRUTE_FORCE_LIMIT = 9


class ViolationKind(str, Enum):
    SHARED_LOWER = "shared_lower"
    SHARED_UPPER = "shared_upper"


@dataclass(frozen=True)
class ClosednessViolation:
    """Edges ``edge1 < edge2`` share their lower (or upper) endpoint but ``missing_edge`` is absent."""

    kind: ViolationKind
    edge1: tuple[int, int]
    edge2: tuple[int, int]
    missing_edge: tuple[int, int]

    def verify(self, g: Graph) -> bool:
        (i, j), (k, l) = self.edge1, self.edge2
        if not (i < j and k < l and g.has_edge(i, j) and g.has_edge(k, l)):
            return False
        if self.kind is ViolationKind.SHARED_LOWER:
            expected = (min(j, l), max(j, l))
            ok = i == k and j != l
        else:
            expected = (min(i, k), max(i, k))
            ok = j == l and i != k
        return ok and self.missing_edge == expected and not g.has_edge(*expected)


class RefusalError(ValueError):
    """Input too large for an exponential-time oracle."""


def _half_cliques(adj: tuple[frozenset[int], ...], n: int, upper: bool) -> bool:
    # For each v the parent is its nearest neighbor on the chosen side; the
    # side-neighborhoods are all cliques iff each one minus its parent sits
    # inside the parent's neighborhood (perfect elimination ordering test).
    side = range(1, n + 1) if upper else range(n, 0, -1)
    for v in side:
        nbrs = [w for w in adj[v] if (w > v if upper else w < v)]
        if len(nbrs) < 2:
            continue
        parent = min(nbrs) if upper else max(nbrs)
        pa = adj[parent]
        for w in nbrs:
            if w != parent and w not in pa:
                return False
    return True


def _smallest_violation(g: Graph) -> ClosednessViolation:
    adj = g.adj
    n = g.n
    best: ClosednessViolation | None = None
    # shared lower endpoint: (i,j), (i,l) with j < l and {j,l} missing
    for i in range(1, n + 1):
        up = sorted(w for w in adj[i] if w > i)
        hit = next(
            ((j, l) for a, j in enumerate(up) for l in up[a + 1 :] if l not in adj[j]),
            None,
        )
        if hit:
            j, l = hit
            best = ClosednessViolation(ViolationKind.SHARED_LOWER, (i, j), (i, l), (j, l))
            break
    # shared upper endpoint: (i,j), (k,j) with i < k and {i,k} missing
    for i in range(1, n + 1):
        if best is not None and i > best.edge1[0]:
            break
        hit = None
        for j in sorted(w for w in adj[i] if w > i):
            k = next((k for k in sorted(adj[j]) if i < k < j and k not in adj[i]), None)
            if k is not None:
                hit = (j, k)
                break
        if hit:
            j, k = hit
            cand = ClosednessViolation(ViolationKind.SHARED_UPPER, (i, j), (k, j), (i, k))
            if best is None or (cand.edge1, cand.edge2) < (best.edge1, best.edge2):
                best = cand
            break
    assert best is not None
    return best


def is_closed_labeling(g: Graph) -> ClosednessViolation | None:
    """None if ``g`` is closed under its own vertex ids, else the smallest witness pair.

    Equivalent to: every upper neighborhood and every lower neighborhood is
    a clique.
    """
    adj = g.adj
    if _half_cliques(adj, g.n, upper=True) and _half_cliques(adj, g.n, upper=False):
        return None
    return _smallest_violation(g)


def _first_closed_labeling(n: int, adj: list[int]) -> list[int] | None:
    """Lexicographically first order of ``0..n-1`` under which the bitmask graph is closed.

    Depth-first over permutations in lexicographic order, abandoning a
    prefix as soon as it already violates closedness; violations never
    disappear when the prefix is extended, so the first full permutation
    reached is the first closed one in plain enumeration order.
    """
    order: list[int] = []
    upper = [0] * n  # neighbors placed after v, so far

    def place(placed: int) -> bool:
        if len(order) == n:
            return True
        for v in range(n):
            bit = 1 << v
            if placed & bit:
                continue
            lower = adj[v] & placed
            ok = True
            rest = lower
            while rest:
                u = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                # earlier neighbors pairwise adjacent; v adjacent to u's later neighbors
                if (lower & ~adj[u] & ~(1 << u)) or (upper[u] & ~adj[v]):
                    ok = False
                    break
            if not ok:
                continue
            touched = lower
            while touched:
                u = (touched & -touched).bit_length() - 1
                touched &= touched - 1
                upper[u] |= bit
            order.append(v)
            if place(placed | bit):
                return True
            order.pop()
            touched = lower
            while touched:
                u = (touched & -touched).bit_length() - 1
                touched &= touched - 1
                upper[u] &= ~bit
        return False

    return list(order) if place(0) else None


def brute_force_closed(g: Graph, limit: int = DEFAULT_BRUTE_FORCE_LIMIT) -> VertexOrdering | None:
    """Search every labeling, per component, for one under which ``g`` is closed.

    Component orderings are concatenated by smallest vertex.  The result is
    re-checked with :func:`is_closed_labeling` before it is returned.
    """
    if g.n > limit:
        raise RefusalError(f"brute force refused: n={g.n} exceeds limit {limit}")
    full: list[int] = []
    for comp in g.components():
        index = {v: i for i, v in enumerate(comp)}
        masks = [0] * len(comp)
        for v in comp:
            for w in g.neighbors(v):
                masks[index[v]] |= 1 << index[w]
        local = _first_closed_labeling(len(comp), masks)
        if local is None:
            return None
        full.extend(comp[i] for i in local)
    sigma = VertexOrdering(full)
    if is_closed_labeling(apply_labeling(g, sigma)) is not None:
        raise AssertionError(f"labeling search returned a non-closed labeling {sigma}")
    return sigma


def count_closed_labelings(g: Graph, limit: int = DEFAULT_BRUTE_FORCE_LIMIT) -> int:
    """Number of the n! labelings under which ``g`` is closed (plain enumeration)."""
    if g.n > limit:
        raise RefusalError(f"enumeration refused: n={g.n} exceeds limit {limit}")
    return sum(
        is_closed_labeling(apply_labeling(g, VertexOrdering(p))) is None
        for p in itertools.permutations(range(1, g.n + 1))
    )


def find_induced_claw(g: Graph) -> tuple[int, int, int, int] | None:
    """Smallest center, then lexicographically smallest pairwise non-adjacent leaf triple."""
    adj = g.adj
    for c in range(1, g.n + 1):
        nbrs = sorted(adj[c])
        for a, b, d in itertools.combinations(nbrs, 3):
            if b not in adj[a] and d not in adj[a] and d not in adj[b]:
                return (c, a, b, d)
    return None


__all__ = [
    "ClosednessViolation",
    "ContractViolation",
    "RefusalError",
    "ViolationKind",
    "brute_force_closed",
    "count_closed_labelings",
    "find_induced_claw",
    "is_closed_labeling",
]
