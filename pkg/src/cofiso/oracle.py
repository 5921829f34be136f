"""Independent checks: exhaustive enumeration and windowed composition.

The enumeration lists every element within an exclusion/shift budget.
The window oracle composes maps pointwise on an initial segment of the
naturals, long enough that the element can be reconstructed from the
table alone; agreement with the algebraic composition is what the main
equivalence property verifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations
from typing import Iterator, Optional

from .core import InvalidShift, PartialIso


class WindowTooSmall(ValueError):
    """The requested window cannot hold both maps' irregular parts."""


@dataclass(frozen=True)
class EnumBounds:
    """Budget for exhaustive enumeration: excluded points drawn from
    {1..n}, shifts from -s..s, optional noise cap j."""

    n: int
    s: int
    j: Optional[int] = None

    def __post_init__(self) -> None:
        if self.n < 0 or self.s < 0:
            raise ValueError("bounds must be non-negative")
        if self.j is not None and self.j < 0:
            raise ValueError("noise cap must be non-negative")


def enumerate_elements(bounds: EnumBounds) -> Iterator[PartialIso]:
    """All valid elements within the budget, exclusion sets in
    lexicographic tuple order, shifts ascending within each set."""
    pts = range(1, bounds.n + 1)
    subsets = sorted(
        chain.from_iterable(combinations(pts, r) for r in range(bounds.n + 1))
    )
    for ex in subsets:
        for s in range(-bounds.s, bounds.s + 1):
            try:
                g = PartialIso(ex, s)
            except InvalidShift:
                continue
            if bounds.j is not None and g.noise > bounds.j:
                continue
            yield g


def _reach(g: PartialIso) -> int:
    return (max(g.excluded) if g.excluded else 0) + abs(g.shift)


def min_window(a: PartialIso, b: PartialIso) -> int:
    return max(_reach(a), _reach(b)) + 1


def default_window(a: PartialIso, b: PartialIso) -> int:
    # one spare column past every irregularity, after a's shift is applied
    return max(_reach(a), _reach(b)) + abs(a.shift) + 2


def window_compose(a: PartialIso, b: PartialIso, window: Optional[int] = None) -> dict:
    """Pointwise table of (a then b) on 1..window: x -> b(a(x)), with
    undefined points omitted."""
    if window is None:
        window = default_window(a, b)
    if window < min_window(a, b):
        raise WindowTooSmall(f"need window >= {min_window(a, b)}, got {window}")
    table = {}
    for x in range(1, window + 1):
        y = a.apply(x)
        if y is None:
            continue
        z = b.apply(y)
        if z is None:
            continue
        table[x] = z
    return table


def compose_via_window(a: PartialIso, b: PartialIso, window: Optional[int] = None) -> PartialIso:
    """Rebuild the composite element from its window table alone."""
    if window is None:
        window = default_window(a, b)
    table = window_compose(a, b, window)
    shifts = {z - x for x, z in table.items()}
    assert len(shifts) == 1, "window table is not a single translation off its holes"
    shift = shifts.pop()
    excluded = tuple(x for x in range(1, window + 1) if x not in table)
    # undefined points must not run into the window edge, or the tail
    # start would be misread
    assert not excluded or excluded[-1] < window, "window too small to see the tail"
    return PartialIso(excluded, shift)
