"""Fixed 2-D layouts for the generator families, for rendering clients.

Coordinates are hand-tuned per family (rings drawn outside-in, matching the
generators' numbering) so boards look the same from run to run; anything
unrecognised falls back to a circle.
"""

from __future__ import annotations

import math

from .graphs import Multigraph

Point = tuple[float, float]


def _ring(count: int, radius: float, phase: float = -math.pi / 2) -> list[Point]:
    return [
        (
            0.5 + radius * math.cos(phase + 2 * math.pi * i / count),
            0.5 + radius * math.sin(phase + 2 * math.pi * i / count),
        )
        for i in range(count)
    ]


def circle_layout(n: int) -> list[Point]:
    if n == 1:
        return [(0.5, 0.5)]
    return _ring(n, 0.42)


def family_layout(family: str, graph: Multigraph) -> list[Point]:
    n = graph.vertex_count
    if family == "tetrahedron":
        return _ring(3, 0.42) + [(0.5, 0.5)]
    if family == "octahedron":
        outer = _ring(3, 0.44)
        inner = _ring(3, 0.2, phase=-math.pi / 2 + math.pi / 3)
        # Pairs (0,1), (2,3), (4,5) are antipodal: outer/inner alternate.
        return [outer[0], inner[0], outer[1], inner[1], outer[2], inner[2]]
    if family == "cube" or (family == "hypercube" and n == 8):
        outer = _ring(4, 0.44, phase=-3 * math.pi / 4)
        inner = _ring(4, 0.22, phase=-3 * math.pi / 4)
        # Gray-code squares: 0,1,3,2 outside and 4,5,7,6 inside.
        order = [0, 1, 3, 2]
        pts: list[Point] = [(0.0, 0.0)] * 8
        for slot, v in enumerate(order):
            pts[v] = outer[slot]
            pts[v + 4] = inner[slot]
        return pts
    if family == "hypercube" and n == 4:
        return _ring(4, 0.4, phase=-3 * math.pi / 4)
    if family == "hypercube" and n == 2:
        return [(0.25, 0.5), (0.75, 0.5)]
    if family == "dodecahedron":
        outer = _ring(5, 0.46)
        middle = _ring(10, 0.3)
        inner = _ring(5, 0.14, phase=-math.pi / 2 + math.pi / 10)
        return outer + middle + inner
    if family == "icosahedron":
        outer = _ring(5, 0.36)
        inner = _ring(5, 0.17, phase=-math.pi / 2 + math.pi / 5)
        return outer + inner + [(0.5, 0.03), (0.5, 0.5)]
    if family == "path":
        if n == 1:
            return [(0.5, 0.5)]
        return [(0.06 + 0.88 * i / (n - 1), 0.5) for i in range(n)]
    return circle_layout(n)
