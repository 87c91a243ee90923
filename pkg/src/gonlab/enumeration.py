"""Shared integer-composition enumeration used by the exact searches."""

from __future__ import annotations

from typing import Iterator, Sequence


def compositions(
    total: int, parts: int, caps: Sequence[int | None] | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield tuples of ``parts`` nonnegative ints summing to ``total``.

    Tuples come out in ascending lexicographic order.  ``caps`` optionally
    bounds each position (``None`` entries are unbounded); infeasible branches
    are pruned by suffix capacity.
    """
    if total < 0:
        return
    if parts == 0:
        if total == 0:
            yield ()
        return
    if caps is None:
        caps = [None] * parts
    if len(caps) != parts:
        raise ValueError("caps must have one entry per part")
    bound = [total if c is None else min(c, total) for c in caps]
    suffix = [0] * (parts + 1)
    for i in range(parts - 1, -1, -1):
        suffix[i] = suffix[i + 1] + bound[i]
    if suffix[0] < total:
        return
    buf = [0] * parts

    def rec(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if i == parts - 1:
            if remaining <= bound[i]:
                buf[i] = remaining
                yield tuple(buf)
            return
        lo = max(0, remaining - suffix[i + 1])
        hi = min(bound[i], remaining)
        for value in range(lo, hi + 1):
            buf[i] = value
            yield from rec(i + 1, remaining - value)

    yield from rec(0, total)
