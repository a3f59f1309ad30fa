"""Binomial edge ideal generators and a quadratic Gröbner basis test.

Monomials in ``x_1..x_n, y_1..y_n`` are exponent tuples ``(x_1..x_n,
y_1..y_n)``.  The term order is lexicographic with ``x_1 > ... > x_n >
y_1 > ... > y_n``, which for such tuples is plain tuple comparison.

Every polynomial met here is a difference of two monomials or a single
monomial, so coefficients are never stored: a :class:`Binomial` means
``lead - trail``.  Reducing modulo an ideal only cares about the
remainder up to sign.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from closedgraphs.closedness import RefusalError
from closedgraphs.graph import Graph

Monomial = tuple[int, ...]

MAX_VERTICES = 12
MAX_EDGES = 40


@dataclass(frozen=True)
class Binomial:
    lead: Monomial
    trail: Monomial | None = None

    def __post_init__(self) -> None:
        if self.trail is not None and not self.trail < self.lead:
            raise ValueError("lead term must exceed trail term")

    def render(self) -> str:
        text = render_monomial(self.lead)
        if self.trail is not None:
            text += " - " + render_monomial(self.trail)
        return text

    def __str__(self) -> str:
        return self.render()


class TermOrder:
    """Lex with x_1 > ... > x_n > y_1 > ... > y_n."""

    name = "lex"

    @staticmethod
    def greater(a: Monomial, b: Monomial) -> bool:
        return a > b


LEX = TermOrder()


def monomial(n: int, x: dict[int, int] | None = None, y: dict[int, int] | None = None) -> Monomial:
    exps = [0] * (2 * n)
    for i, e in (x or {}).items():
        exps[i - 1] += e
    for i, e in (y or {}).items():
        exps[n + i - 1] += e
    return tuple(exps)


def render_monomial(m: Monomial) -> str:
    n = len(m) // 2
    parts = []
    for idx, e in enumerate(m):
        if e:
            var = f"x{idx + 1}" if idx < n else f"y{idx - n + 1}"
            parts.append(var if e == 1 else f"{var}^{e}")
    return "*".join(parts) or "1"


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(p <= q for p, q in zip(a, b))


def _mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(p + q for p, q in zip(a, b))


def _div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(p - q for p, q in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(p, q) for p, q in zip(a, b))


def _difference(a: Monomial, b: Monomial) -> Binomial | None:
    """``a - b`` up to sign, or None when it vanishes."""
    if a == b:
        return None
    return Binomial(a, b) if a > b else Binomial(b, a)


def edge_binomials(g: Graph) -> list[Binomial]:
    """``x_i y_j - x_j y_i`` for each edge ``i < j``, in lexicographic edge order."""
    n = g.n
    return [Binomial(monomial(n, {i: 1}, {j: 1}), monomial(n, {j: 1}, {i: 1})) for i, j in g.edges()]


def s_polynomial(f: Binomial, g: Binomial, order: TermOrder = LEX) -> Binomial | None:
    lcm = _lcm(f.lead, g.lead)
    # (lcm/Lf)(Lf - Tf) - (lcm/Lg)(Lg - Tg) = (lcm/Lg) Tg - (lcm/Lf) Tf
    a = _mul(_div(lcm, g.lead), g.trail) if g.trail is not None else None
    b = _mul(_div(lcm, f.lead), f.trail) if f.trail is not None else None
    if a is None and b is None:
        return None
    if a is None or b is None:
        return Binomial(a if b is None else b)
    return _difference(a, b)


def reduce(p: Binomial | None, basis: list[Binomial], order: TermOrder = LEX) -> Binomial | None:
    """Fully reduce ``p``: lead term first, then the trail term.

    The first basis element (in list order) whose lead divides the term is
    used.  Each step lowers the lead, or keeps it and lowers the trail, so
    the pair (lead, trail) strictly decreases and the loop ends.
    """
    if p is None:
        return None
    measure = (p.lead, p.trail or ())
    while p is not None:
        step = None
        for b in basis:
            if _divides(b.lead, p.lead):
                q = _div(p.lead, b.lead)
                moved = _mul(q, b.trail) if b.trail is not None else None
                # p - q*b: the lead cancels, q*trail(b) remains beside trail(p)
                if moved is None:
                    step = Binomial(p.trail) if p.trail is not None else None
                elif p.trail is None:
                    step = Binomial(moved)
                else:
                    step = _difference(moved, p.trail)
                break
        else:
            if p.trail is None:
                return p
            for b in basis:
                if _divides(b.lead, p.trail):
                    q = _div(p.trail, b.lead)
                    moved = _mul(q, b.trail) if b.trail is not None else None
                    step = Binomial(p.lead) if moved is None else _difference(p.lead, moved)
                    break
            else:
                return p
        if step is None:
            return None
        new = (step.lead, step.trail or ())
        assert new < measure, "reduction failed to decrease"
        measure = new
        p = step
    return None


@dataclass(frozen=True)
class FailingPair:
    edge1: tuple[int, int]
    edge2: tuple[int, int]
    remainder: Binomial

    def render(self) -> str:
        (i, j), (k, l) = self.edge1, self.edge2
        return f"({i},{j}),({k},{l}) remainder {self.remainder.render()}"


@dataclass(frozen=True)
class GroebnerReport:
    pairs_checked: int
    failure: FailingPair | None

    @property
    def ok(self) -> bool:
        return self.failure is None


def is_quadratic_groebner(g: Graph, max_vertices: int = MAX_VERTICES, max_edges: int = MAX_EDGES) -> GroebnerReport:
    """Do the edge binomials form a Gröbner basis under lex?

    Every S-pair of distinct generators is reduced against all generators;
    the first pair (lexicographic edge order) leaving a nonzero remainder is
    reported.
    """
    if g.n > max_vertices or g.m > max_edges:
        raise RefusalError(
            f"Gröbner check refused: n={g.n}, m={g.m} exceeds limits n<={max_vertices}, m<={max_edges}"
        )
    edges = g.edges()
    gens = edge_binomials(g)
    checked = 0
    for (e1, f), (e2, h) in itertools.combinations(zip(edges, gens), 2):
        checked += 1
        r = reduce(s_polynomial(f, h), gens)
        if r is not None:
            return GroebnerReport(checked, FailingPair(e1, e2, r))
    return GroebnerReport(checked, None)
