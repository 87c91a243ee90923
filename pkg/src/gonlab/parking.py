"""Unwinnable chip placements on complete graphs and parking functions.

Put one unit of debt on the last vertex of a complete graph and ask which
nonnegative placements on the remaining vertices still lose the debt-clearing
game.  Shifting every losing tuple up by one lands exactly on the parking
functions of the matching length; both sides are enumerated independently so
the bijection can be checked rather than assumed.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .dhar import _winnable_raw
from .graphs import complete

MAX_N = 8


def is_parking_function(t: Sequence[int]) -> bool:
    """Sorted-prefix test: the tuple sorted ascending must satisfy ``b_i <= i``
    (1-indexed) with all entries positive integers."""
    if not t:
        return False
    for x in t:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            return False
    return all(b <= i for i, b in enumerate(sorted(t), start=1))


def parking_functions(length: int) -> Iterator[tuple[int, ...]]:
    """Every parking function of the given length, by direct enumeration."""
    if length < 1:
        raise ValueError("length must be positive")
    for t in itertools.product(range(1, length + 1), repeat=length):
        if is_parking_function(t):
            yield t


def unwinnable_placements(n: int) -> list[tuple[int, ...]]:
    """Tuples ``(c_1, .., c_{n-1})`` for which the divisor with those chips and
    one debt on the last vertex of the complete graph on ``n`` vertices is
    unwinnable.

    Enumeration stops at ``n - 2`` chips per coordinate: a coordinate of
    ``n - 1`` lets that vertex fire solo and cover the debt.  That bound is
    re-checked empirically by :func:`verify_coordinate_bound`.
    """
    if not 2 <= n <= MAX_N:
        raise ValueError(f"n must be between 2 and {MAX_N}")
    graph = complete(n)
    out = []
    for t in itertools.product(range(n - 1), repeat=n - 1):
        if not _winnable_raw(graph, list(t) + [-1]):
            out.append(t)
    return out


def verify_coordinate_bound(n: int) -> bool:
    """Confirm that any placement with a coordinate of ``n - 1`` is winnable.

    Chips only help, so this shell check extends to all larger coordinates.
    """
    if not 2 <= n <= MAX_N:
        raise ValueError(f"n must be between 2 and {MAX_N}")
    graph = complete(n)
    for t in itertools.product(range(n), repeat=n - 1):
        if max(t) == n - 1 and not _winnable_raw(graph, list(t) + [-1]):
            return False
    return True


def verify_bijection(n: int) -> bool:
    """Shifted unwinnable placements equal the parking functions of length
    ``n - 1`` as sets."""
    shifted = {tuple(c + 1 for c in t) for t in unwinnable_placements(n)}
    return shifted == set(parking_functions(n - 1))
