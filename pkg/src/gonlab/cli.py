"""Command-line client for the core engine.

Every subcommand reads and writes JSON so results can be piped between
commands and into the HTTP service.  Exit codes: 0 success, 1 domain error
(bad input data, exhausted search budget), 2 usage error.
"""

from __future__ import annotations

import json
import math
import sys
from pathlib import Path

import click

from . import graphs
from .certificates import (
    Bramble,
    Scramble,
    TreeCutDecomposition,
    bramble_order,
    egg_cut_number,
    hitting_number,
    treecut_width,
)
from .dhar import burn, q_reduce_trace, rank
from .divisors import Divisor
from .gonality import SearchBudget, SearchBudgetExceeded, gonality, higher_gonality
from .graphs import FAMILIES, Multigraph
from .io import (
    FormatError,
    certificate_from_dict,
    divisor_from_dict,
    graph_from_dict,
    graph_to_dict,
)
from .parking import parking_functions, unwinnable_placements, verify_coordinate_bound


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON in {path}: {exc}") from None
    except OSError as exc:
        raise FormatError(str(exc)) from None


def _load_graph(path: str) -> Multigraph:
    return graph_from_dict(_read_json(path))


def _load_divisor(path: str, graph: Multigraph) -> Divisor:
    return divisor_from_dict(_read_json(path), graph)


def _emit(payload: dict) -> None:
    click.echo(json.dumps(payload, indent=2))


def _fail(message: str) -> None:
    click.echo(json.dumps({"error": message}, indent=2))
    sys.exit(1)


@click.group()
def main() -> None:
    """Chip-firing games, gonality search, and bound certificates."""


@main.command()
@click.option("--family", required=True, help="Graph family name.")
@click.option("--size", type=int, help="Size parameter (n for complete/cycle/path, dimension for hypercube).")
@click.option("--parts", help="Comma-separated part sizes for complete-multipartite.")
def generate(family: str, size: int | None, parts: str | None) -> None:
    """Emit a generator graph as JSON."""
    try:
        if family in FAMILIES:
            g = FAMILIES[family]()
        elif family == "complete":
            g = graphs.complete(_require_size(size, family))
        elif family == "cycle":
            g = graphs.cycle(_require_size(size, family))
        elif family == "path":
            g = graphs.path(_require_size(size, family))
        elif family == "hypercube":
            g = graphs.hypercube(_require_size(size, family))
        elif family == "complete-multipartite":
            if not parts:
                raise ValueError("complete-multipartite needs --parts like 2,3,4")
            g = graphs.complete_multipartite([int(p) for p in parts.split(",")])
        else:
            raise ValueError(f"unknown family {family!r}")
    except ValueError as exc:
        _fail(str(exc))
        return
    _emit(graph_to_dict(g))


def _require_size(size: int | None, family: str) -> int:
    if size is None:
        raise ValueError(f"family {family!r} needs --size")
    return size


@main.command("gonality")
@click.argument("graph_path")
@click.option("--budget-seconds", type=float, help="Wall-clock cap for the search.")
@click.option("--budget-nodes", type=int, help="Node cap for the search.")
@click.option("--raw-algorithm", is_flag=True, help="Disable reduced-form pruning.")
@click.option("--rank", "rank_target", type=int, default=1, show_default=True,
              help="Compute the minimal degree reaching this rank.")
def gonality_cmd(
    graph_path: str,
    budget_seconds: float | None,
    budget_nodes: int | None,
    raw_algorithm: bool,
    rank_target: int,
) -> None:
    """Exact gonality (or a higher gonality) of a connected graph."""
    try:
        g = _load_graph(graph_path)
        budget = None
        if budget_seconds is not None or budget_nodes is not None:
            budget = SearchBudget(seconds=budget_seconds, nodes=budget_nodes)
        if rank_target == 1:
            result = gonality(g, budget, raw_algorithm=raw_algorithm)
            _emit(result.as_dict())
        else:
            value = higher_gonality(g, rank_target, budget)
            _emit({"rank": rank_target, "gonality": value})
    except SearchBudgetExceeded as exc:
        click.echo(
            json.dumps(
                {
                    "error": "budget exhausted",
                    "bracket": [exc.lower, exc.upper],
                    "bounds": exc.report.as_dict(),
                    "nodes": exc.nodes,
                },
                indent=2,
            )
        )
        sys.exit(1)
    except (FormatError, ValueError) as exc:
        _fail(str(exc))


@main.command("rank")
@click.argument("graph_path")
@click.argument("divisor_path")
def rank_cmd(graph_path: str, divisor_path: str) -> None:
    """Divisor rank with a failing debt witness."""
    try:
        g = _load_graph(graph_path)
        d = _load_divisor(divisor_path, g)
        result = rank(d)
    except (FormatError, ValueError) as exc:
        _fail(str(exc))
        return
    _emit({
        "rank": result.rank,
        "witness": {"chips": list(result.witness.chips)},
    })


@main.command("dhar")
@click.argument("graph_path")
@click.argument("divisor_path")
@click.option("--q", type=int, default=0, show_default=True, help="Base vertex.")
def dhar_cmd(graph_path: str, divisor_path: str, q: int) -> None:
    """One burning pass from q: burned and unburned sets."""
    try:
        g = _load_graph(graph_path)
        d = _load_divisor(divisor_path, g)
        outcome = burn(d, q)
    except (FormatError, ValueError) as exc:
        _fail(str(exc))
        return
    _emit({
        "q": q,
        "burned": sorted(outcome.burned),
        "unburned": sorted(outcome.unburned),
        "suggested_fire_set": sorted(outcome.unburned),
    })


@main.command("reduce")
@click.argument("graph_path")
@click.argument("divisor_path")
@click.option("--q", type=int, default=0, show_default=True, help="Base vertex.")
def reduce_cmd(graph_path: str, divisor_path: str, q: int) -> None:
    """Reduced form at q, with the firing steps that reach it."""
    try:
        g = _load_graph(graph_path)
        d = _load_divisor(divisor_path, g)
        reduced, steps = q_reduce_trace(d, q)
    except (FormatError, ValueError) as exc:
        _fail(str(exc))
        return
    _emit({
        "q": q,
        "chips": list(reduced.chips),
        "pretty": reduced.pretty(),
        "steps": steps,
    })


@main.command("winnable")
@click.argument("graph_path")
@click.argument("divisor_path")
def winnable_cmd(graph_path: str, divisor_path: str) -> None:
    """Can firing moves clear all debt?"""
    try:
        g = _load_graph(graph_path)
        d = _load_divisor(divisor_path, g)
        reduced, _ = q_reduce_trace(d, 0)
    except (FormatError, ValueError) as exc:
        _fail(str(exc))
        return
    _emit({
        "winnable": reduced.chips[0] >= 0,
        "q_reduced": list(reduced.chips),
    })


@main.command("certify")
@click.argument("graph_path")
@click.argument("certificate_path")
def certify_cmd(graph_path: str, certificate_path: str) -> None:
    """Evaluate a certificate and report the bound it implies."""
    try:
        g = _load_graph(graph_path)
        cert = certificate_from_dict(_read_json(certificate_path), g)
        if isinstance(cert, Scramble):
            hits = hitting_number(cert)
            cut = egg_cut_number(cert)
            order = min(hits.size, cut)
            _emit({
                "type": "scramble",
                "eggs": len(cert.eggs),
                "hitting_number": hits.size,
                "hitting_set": sorted(hits.vertices),
                "egg_cut_number": None if math.isinf(cut) else cut,
                "order": None if math.isinf(order) else order,
                "bound": {
                    "kind": "lower",
                    "value": None if math.isinf(order) else order,
                    "relation": "order <= scramble number <= gonality",
                },
            })
        elif isinstance(cert, Bramble):
            order = bramble_order(cert)
            _emit({
                "type": "bramble",
                "sets": len(cert.sets),
                "order": order,
                "bound": {
                    "kind": "lower",
                    "value": order - 1,
                    "relation": "order - 1 <= treewidth <= gonality",
                },
            })
        elif isinstance(cert, TreeCutDecomposition):
            width = treecut_width(cert, g)
            _emit({
                "type": "treecut",
                "width": width,
                "bound": {
                    "kind": "cap",
                    "value": width,
                    "relation": "scramble number <= screewidth <= width",
                },
            })
    except (FormatError, ValueError) as exc:
        _fail(str(exc))


@main.command("parking")
@click.option("--n", type=int, required=True, help="Complete-graph size (2..8).")
@click.option("--verify-bound/--no-verify-bound", default=False,
              help="Re-check the per-coordinate enumeration bound first.")
def parking_cmd(n: int, verify_bound: bool) -> None:
    """Unwinnable placements with debt on the last vertex, next to the parking
    functions they shift onto."""
    try:
        verified = verify_coordinate_bound(n) if verify_bound else None
        if verified is False:
            _fail("coordinate bound failed; enumeration would be incomplete")
            return
        losing = unwinnable_placements(n)
        functions = sorted(parking_functions(n - 1), key=lambda t: (sum(t), tuple(-x for x in t)))
        losing_sorted = sorted(losing, key=lambda t: (sum(t), tuple(-x for x in t)))
    except ValueError as exc:
        _fail(str(exc))
        return
    shifted = {tuple(c + 1 for c in t) for t in losing}
    _emit({
        "n": n,
        "unwinnable": [list(t) for t in losing_sorted],
        "parking_functions": [list(t) for t in functions],
        "bijection": shifted == set(functions),
        "coordinate_bound_verified": verified,
    })


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--static-dir", type=click.Path(), help="Built web UI to serve at /.")
@click.option("--session-dir", type=click.Path(), help="Persist session logs here.")
def serve_cmd(host: str, port: int, static_dir: str | None, session_dir: str | None) -> None:
    """Run the HTTP game API (and the web UI, when built)."""
    import uvicorn

    from .service import create_app

    if static_dir is None:
        bundled = Path(__file__).resolve().parents[2] / "frontend" / "dist"
        if bundled.is_dir():
            static_dir = str(bundled)
    app = create_app(static_dir=static_dir, session_dir=session_dir)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
