"""JSON wire formats for graphs, divisors, and certificates, plus DOT export.

Graph JSON: ``{"vertices": n, "edges": [[u, v], ...]}`` where repeated pairs
encode multiplicity.  Divisor JSON: ``{"chips": [c0, c1, ...]}``.  Certificate
JSON carries a ``type`` of ``scramble``, ``bramble``, or ``treecut``.
"""

from __future__ import annotations

from typing import Any

from .certificates import Bramble, Scramble, TreeCutDecomposition
from .divisors import Divisor
from .graphs import Multigraph


class FormatError(ValueError):
    """Raised when a JSON document does not match the wire format."""


def graph_to_dict(g: Multigraph) -> dict:
    out: dict[str, Any] = {
        "vertices": g.vertex_count,
        "edges": [[u, v] for u, v in g.edge_pairs()],
    }
    if g.labels is not None:
        out["labels"] = list(g.labels)
    return out


def graph_from_dict(data: Any) -> Multigraph:
    if not isinstance(data, dict):
        raise FormatError("graph document must be a JSON object")
    try:
        vertices = data["vertices"]
        edges = data["edges"]
    except (KeyError, TypeError):
        raise FormatError("graph document needs 'vertices' and 'edges'") from None
    if not isinstance(vertices, int) or isinstance(vertices, bool):
        raise FormatError("'vertices' must be an integer")
    if not isinstance(edges, list):
        raise FormatError("'edges' must be a list of vertex pairs")
    labels = data.get("labels")
    try:
        return Multigraph(vertices, edges, labels=labels)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def divisor_to_dict(d: Divisor) -> dict:
    return {"chips": list(d.chips)}


def divisor_from_dict(data: Any, graph: Multigraph) -> Divisor:
    if not isinstance(data, dict) or "chips" not in data:
        raise FormatError("divisor document needs a 'chips' list")
    chips = data["chips"]
    if not isinstance(chips, list):
        raise FormatError("'chips' must be a list of integers")
    try:
        return Divisor(graph, chips)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def certificate_from_dict(data: Any, graph: Multigraph):
    if not isinstance(data, dict) or "type" not in data:
        raise FormatError("certificate document needs a 'type'")
    kind = data["type"]
    try:
        if kind == "scramble":
            return Scramble(graph, data["eggs"], uniform_k=data.get("uniform"))
        if kind == "bramble":
            return Bramble(graph, data["sets"])
        if kind == "treecut":
            return TreeCutDecomposition(data["nodes"], data["links"], data["placement"])
    except KeyError as exc:
        raise FormatError(f"certificate is missing field {exc}") from None
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    raise FormatError(f"unknown certificate type {kind!r}")


def certificate_to_dict(cert) -> dict:
    if isinstance(cert, Scramble):
        out: dict[str, Any] = {
            "type": "scramble",
            "eggs": [sorted(egg) for egg in cert.eggs],
        }
        if cert.uniform_k is not None:
            out["uniform"] = cert.uniform_k
        return out
    if isinstance(cert, Bramble):
        return {"type": "bramble", "sets": [sorted(s) for s in cert.sets]}
    if isinstance(cert, TreeCutDecomposition):
        return {
            "type": "treecut",
            "nodes": cert.node_count,
            "links": [list(link) for link in cert.links],
            "placement": list(cert.placement),
        }
    raise TypeError(f"not a certificate: {cert!r}")


def to_dot(g: Multigraph, name: str = "G") -> str:
    """DOT rendering, mainly for documentation; multiplicities repeat edges."""
    lines = [f"graph {name} {{"]
    for v in g.vertices():
        label = f' [label="{g.labels[v]}"]' if g.labels else ""
        lines.append(f"  {v}{label};")
    for u, v in g.edge_pairs():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)
