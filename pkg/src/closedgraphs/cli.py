"""Command-line front end.

Exit codes: 0 closed, 1 not closed, 2 error (bad input, size limits, or an
internal disagreement surfaced by ``--verify``).
"""

from __future__ import annotations

import json
import math
import sys
import time
from contextlib import contextmanager

import click

from closedgraphs.closedness import (
    DEFAULT_BRUTE_FORCE_LIMIT,
    RefusalError,
    brute_force_closed,
    find_induced_claw,
    is_closed_labeling,
)
from closedgraphs.cliques import consecutive_ones, facets_of_closed, incidence_matrix
from closedgraphs.generators import KINDS, generate
from closedgraphs.graph import (
    ContractViolation,
    Graph,
    GraphError,
    LabeledGraph,
    VertexOrdering,
    format_edge_list,
    parse_edge_list,
)
from closedgraphs.groebner import MAX_EDGES, MAX_VERTICES, is_quadratic_groebner
from closedgraphs.intervals import build_representation, format_intervals_decimal, intersection_graph, is_proper
from closedgraphs.recognition import ordering_to_closed_labeling, recognize_proper_interval

EXIT = {"closed": 0, "not_closed": 1, "error": 2}


class Report:
    """Verdict, certificate and per-phase timings for one command."""

    def __init__(self) -> None:
        self.status = "error"
        self.certificate: str | None = None
        self.payload: dict = {}
        self.timing: dict[str, float] = {}

    @contextmanager
    def phase(self, name: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timing[name] = round((time.perf_counter() - start) * 1000, 3)

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "certificate": self.certificate,
            "payload": self.payload,
            "timing_ms": self.timing,
        }


def _render_value(value) -> list[str]:
    if isinstance(value, list) and value and isinstance(value[0], list):
        return ["  " + " ".join(map(str, row)) for row in value]
    if isinstance(value, list) and value and isinstance(value[0], str):
        return ["  " + row for row in value]
    if isinstance(value, list):
        return [" ".join(map(str, value))]
    if isinstance(value, dict):
        return [f"  {k}: {' '.join(map(str, v)) if isinstance(v, list) else v}" for k, v in value.items()]
    return [str(value)]


def render_text(data: dict) -> str:
    lines = [f"status: {data['status']}"]
    if data["certificate"]:
        lines.append(f"certificate: {data['certificate']}")
    for key, value in data["payload"].items():
        rendered = _render_value(value)
        if len(rendered) == 1 and not rendered[0].startswith("  "):
            lines.append(f"{key}: {rendered[0]}")
        else:
            lines.append(f"{key}:")
            lines.extend(rendered)
    lines.append("timing_ms: " + " ".join(f"{k}={v}" for k, v in data["timing_ms"].items()))
    return "\n".join(lines) + "\n"


def _emit(report: Report, as_json: bool) -> None:
    data = report.as_dict()
    if as_json:
        click.echo(json.dumps(data, sort_keys=False))
    else:
        click.echo(render_text(data), nl=False)
    sys.exit(EXIT[report.status])


def _fail(report: Report, as_json: bool, exc: Exception) -> None:
    report.status = "error"
    report.certificate = None
    report.payload = {"error": str(exc)}
    click.echo(f"error: {exc}", err=True)
    _emit(report, as_json)


def _read_graph(source: str, report: Report) -> Graph:
    with report.phase("parse"):
        if source == "-":
            return parse_edge_list(sys.stdin.read())
        with open(source, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())


def _violation_payload(v) -> dict:
    return {
        "triple": [v.u, v.v, v.w],
        "present_edge": list(v.present_edge),
        "missing_edge": list(v.missing_edge),
    }


def _closedness_payload(v) -> dict:
    return {
        "kind": v.kind.value,
        "edge1": list(v.edge1),
        "edge2": list(v.edge2),
        "missing_edge": list(v.missing_edge),
    }


def _closed_labeled(g: Graph, report: Report, assume_closed: bool) -> LabeledGraph | None:
    """Closed labeling of ``g``, or None after filling ``report`` with the reason."""
    if assume_closed:
        with report.phase("check"):
            witness = is_closed_labeling(g)
        if witness is not None:
            report.status = "not_closed"
            report.certificate = "closedness_violation"
            report.payload = _closedness_payload(witness)
            return None
        return LabeledGraph(g, VertexOrdering.identity(g.n))
    with report.phase("recognize"):
        result = recognize_proper_interval(g)
    if result.ordering is None:
        report.status = "not_closed"
        report.certificate = "umbrella_violation"
        report.payload = {"ordering": list(result.final_sweep.as_tuple())}
        report.payload.update(_violation_payload(result.violation))
        return None
    with report.phase("relabel"):
        return ordering_to_closed_labeling(g, result.ordering)


def _labels(lg: LabeledGraph) -> list[int]:
    return lg.labeling.pos[1:].tolist()


input_argument = click.argument("source", default="-", metavar="[INPUT]")
json_option = click.option("--json", "as_json", is_flag=True, help="Emit a JSON report.")
assume_option = click.option(
    "--assume-closed", is_flag=True, help="Treat the input labels as the closed labeling."
)


@click.group()
def main() -> None:
    """Decide closedness of simple graphs and emit checkable certificates."""


@main.command()
@input_argument
@json_option
@click.option("--verify", is_flag=True, help="Re-check the verdict with independent oracles.")
def recognize(source: str, as_json: bool, verify: bool) -> None:
    """Recognize a closed (proper interval) graph from an edge list."""
    report = Report()
    try:
        g = _read_graph(source, report)
        with report.phase("recognize"):
            result = recognize_proper_interval(g)
        if result.ordering is not None:
            with report.phase("relabel"):
                lg = ordering_to_closed_labeling(g, result.ordering)
            report.status = "closed"
            report.certificate = "closed_labeling"
            report.payload = {"ordering": list(result.ordering.as_tuple()), "labels": _labels(lg)}
        else:
            report.status = "not_closed"
            report.certificate = "umbrella_violation"
            report.payload = {"ordering": list(result.final_sweep.as_tuple())}
            report.payload.update(_violation_payload(result.violation))
        if verify:
            with report.phase("verify"):
                report.payload["verify"] = _verify(g, result, report)
    except (GraphError, ContractViolation, RefusalError, OSError) as exc:
        _fail(report, as_json, exc)
    _emit(report, as_json)


def _verify(g: Graph, result, report: Report) -> dict:
    checks: dict[str, str] = {}
    disagreements = []
    if result.ordering is not None:
        h = ordering_to_closed_labeling(g, result.ordering).graph
        witness = is_closed_labeling(h)
        checks["closed_labeling"] = "ok" if witness is None else f"FAILED {witness}"
        if witness is not None:
            disagreements.append("relabeled graph is not closed")
        if h.n <= MAX_VERTICES and h.m <= MAX_EDGES:
            gb = is_quadratic_groebner(h)
            checks["groebner"] = "ok" if gb.ok else f"FAILED {gb.failure.render()}"
            if not gb.ok:
                disagreements.append("edge binomials are not a Gröbner basis")
        else:
            checks["groebner"] = "skipped (size)"
    else:
        ok = result.violation.verify(g, result.final_sweep)
        checks["triple"] = "ok" if ok else "FAILED"
        if not ok:
            disagreements.append("violating triple does not check out")
        if g.n <= DEFAULT_BRUTE_FORCE_LIMIT:
            found = brute_force_closed(g)
            checks["brute_force"] = "ok" if found is None else f"FAILED closed under {found.as_tuple()}"
            if found is not None:
                disagreements.append("exhaustive search found a closed labeling")
        else:
            checks["brute_force"] = "skipped (size)"
    if disagreements:
        raise ContractViolation("internal disagreement: " + "; ".join(disagreements))
    return checks


@main.command()
@input_argument
@json_option
@assume_option
@click.option("--check", is_flag=True, help="Verify round trip and properness.")
@click.option("--decimal", is_flag=True, help="Also print rounded decimal endpoints.")
def intervals(source: str, as_json: bool, assume_closed: bool, check: bool, decimal: bool) -> None:
    """Exact interval model I_k = [k, b(k) + k/n] of a closed graph."""
    report = Report()
    try:
        g = _read_graph(source, report)
        lg = _closed_labeled(g, report, assume_closed)
        if lg is not None:
            with report.phase("intervals"):
                rep = build_representation(lg)
            report.status = "closed"
            report.certificate = "closed_labeling"
            report.payload = {
                "labels": _labels(lg),
                "intervals": [
                    [k, l, r, rep.denom]
                    for k, (l, r) in enumerate(zip(rep.left.tolist(), rep.right.tolist()), start=1)
                ],
            }
            if decimal:
                report.payload["approximate"] = format_intervals_decimal(rep).rstrip("\n").split("\n")
            if check:
                with report.phase("check"):
                    round_trip = intersection_graph(rep) == lg.graph
                    proper = is_proper(rep)
                report.payload["round_trip"] = round_trip
                report.payload["proper"] = proper
                if not (round_trip and proper):
                    raise ContractViolation("interval model failed its own check")
    except (GraphError, ContractViolation, RefusalError, OSError) as exc:
        _fail(report, as_json, exc)
    _emit(report, as_json)


@main.command()
@input_argument
@json_option
@assume_option
def facets(source: str, as_json: bool, assume_closed: bool) -> None:
    """Maximal cliques of a closed graph as label intervals."""
    report = Report()
    try:
        g = _read_graph(source, report)
        lg = _closed_labeled(g, report, assume_closed)
        if lg is not None:
            with report.phase("facets"):
                f = facets_of_closed(lg)
            report.status = "closed"
            report.certificate = "closed_labeling"
            report.payload = {"labels": _labels(lg), "facets": [list(p) for p in f.facets]}
    except (GraphError, ContractViolation, RefusalError, OSError) as exc:
        _fail(report, as_json, exc)
    _emit(report, as_json)


@main.command()
@input_argument
@json_option
@assume_option
@click.option("--matrix", is_flag=True, help="Include the dense 0/1 incidence matrix.")
def c1p(source: str, as_json: bool, assume_closed: bool, matrix: bool) -> None:
    """Consecutive-ones check of the clique-vertex incidence matrix."""
    report = Report()
    try:
        g = _read_graph(source, report)
        lg = _closed_labeled(g, report, assume_closed)
        if lg is not None:
            with report.phase("c1p"):
                f = facets_of_closed(lg)
                mat = incidence_matrix(f, g.n)
                verdict = consecutive_ones(mat)
            report.status = "closed" if verdict else "error"
            report.certificate = "closed_labeling"
            report.payload = {"labels": _labels(lg), "facets": [list(p) for p in f.facets], "c1p": verdict}
            if matrix and mat.dense is not None:
                report.payload["matrix"] = mat.dense.tolist()
            if not verdict:
                raise ContractViolation("incidence matrix of a closed labeling lacks consecutive ones")
    except (GraphError, ContractViolation, RefusalError, OSError) as exc:
        _fail(report, as_json, exc)
    _emit(report, as_json)


@main.command()
@input_argument
@json_option
@click.option("--limit", default=DEFAULT_BRUTE_FORCE_LIMIT, show_default=True, help="Largest n searched.")
def oracle(source: str, as_json: bool, limit: int) -> None:
    """Exhaustive search over all labelings (small graphs only)."""
    report = Report()
    try:
        g = _read_graph(source, report)
        with report.phase("search"):
            sigma = brute_force_closed(g, limit=limit)
        total = math.factorial(g.n)
        if sigma is not None:
            report.status = "closed"
            report.certificate = "closed_labeling"
            report.payload = {"ordering": list(sigma.as_tuple()), "labels": sigma.pos[1:].tolist()}
        else:
            report.status = "not_closed"
            report.certificate = "closedness_violation"
            claw = find_induced_claw(g)
            report.payload = {
                "summary": f"not closed ({total}/{total} labelings fail)",
                "induced_claw": list(claw) if claw else "none",
            }
    except (GraphError, ContractViolation, RefusalError, OSError) as exc:
        _fail(report, as_json, exc)
    _emit(report, as_json)


@main.command()
@input_argument
@json_option
def gb(source: str, as_json: bool) -> None:
    """Do the edge binomials form a quadratic Gröbner basis (lex, input labels)?"""
    report = Report()
    try:
        g = _read_graph(source, report)
        with report.phase("groebner"):
            res = is_quadratic_groebner(g)
        if res.ok:
            report.status = "closed"
            report.certificate = "closed_labeling"
            noun = "S-pair" if res.pairs_checked == 1 else "S-pairs"
            report.payload = {"summary": f"quadratic GB: yes ({res.pairs_checked} {noun}, all reduce to 0)"}
        else:
            f = res.failure
            report.status = "not_closed"
            report.certificate = "failing_spair"
            report.payload = {
                "summary": "quadratic GB: no",
                "pair": f"({f.edge1[0]},{f.edge1[1]}),({f.edge2[0]},{f.edge2[1]})",
                "remainder": f.remainder.render(),
            }
    except (GraphError, ContractViolation, RefusalError, OSError) as exc:
        _fail(report, as_json, exc)
    _emit(report, as_json)


@main.command()
@click.argument("kind", type=click.Choice(KINDS))
@click.argument("n", type=int, required=False)
@click.option("--m", "m", type=int, help="Edge count (random_gnm).")
@click.option("--length", type=float, help="Interval length on [0, 1) (random_unit_interval).")
@click.option("--seed", type=int, default=0, show_default=True)
def gen(kind: str, n: int | None, m: int | None, length: float | None, seed: int) -> None:
    """Print a generated graph as an edge list."""
    try:
        g = generate(kind, n, m=m, length=length, seed=seed)
    except ContractViolation as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    click.echo(format_edge_list(g), nl=False)


@main.command()
@click.option("--sizes", default="100000,1000000", show_default=True, help="Comma-separated vertex counts.")
@click.option("--degree", default=20.0, show_default=True, help="Expected average degree.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--repeat", type=int, default=1, show_default=True, help="Runs per size; the fastest is kept.")
def bench(sizes: str, degree: float, seed: int, repeat: int) -> None:
    """CSV of recognition wall time on random unit interval graphs."""
    try:
        ns = [int(s) for s in sizes.split(",") if s.strip()]
    except ValueError:
        click.echo("error: --sizes must be comma-separated integers", err=True)
        sys.exit(2)
    # compile the kernels outside the timed region
    recognize_proper_interval(generate("path", 3))
    click.echo("n,m,seconds")
    for n in ns:
        g = generate("random_unit_interval", n, length=degree / (2 * n), seed=seed)
        best = math.inf
        for _ in range(max(repeat, 1)):
            start = time.perf_counter()
            result = recognize_proper_interval(g)
            best = min(best, time.perf_counter() - start)
        if result.ordering is None:
            click.echo(f"error: unit interval graph rejected at n={n}", err=True)
            sys.exit(2)
        click.echo(f"{n},{g.m},{best:.6f}")


if __name__ == "__main__":
    main()
