"""The bounded-noise monoid with the integer group adjoined as an ideal.

Adjoining one element per shift value turns the quotient onto the
integers into an inner ideal: Group(k) * x = x * Group(k) = Group(k + pi x).
Group(0) then commutes with everything, and the up-sets above it are the
shift-0 layer of the monoid.

>>> ext_mul(Group(3), BETA)
grp(2)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .core import (
    ALPHA,
    BETA,
    InvalidShift,
    NoiseParams,
    PartialIso,
    leq,
    noise_bounded,
)


class NotInUpSet(ValueError):
    """Argument must sit above the adjoined zero (shift 0 or Group(0))."""


@dataclass(frozen=True, order=True)
class Group:
    """Element k of the adjoined integer group."""

    k: int

    def __repr__(self) -> str:
        return f"grp({self.k})"


ExtElem = Union[PartialIso, Group]


def _check_member(x: ExtElem, params: Optional[NoiseParams]) -> None:
    if params is not None and isinstance(x, PartialIso) and not noise_bounded(x, params.j):
        raise ValueError(f"{x!r} has noise {x.noise}, above the bound {params.j}")


def ext_pi(x: ExtElem) -> int:
    return x.k if isinstance(x, Group) else x.pi


def ext_mul(x: ExtElem, y: ExtElem, params: Optional[NoiseParams] = None) -> ExtElem:
    """Product in the extended semigroup; any Group factor absorbs."""
    _check_member(x, params)
    _check_member(y, params)
    if isinstance(x, PartialIso) and isinstance(y, PartialIso):
        return x * y
    return Group(ext_pi(x) + ext_pi(y))


def ext_inv(x: ExtElem) -> ExtElem:
    return Group(-x.k) if isinstance(x, Group) else x.inverse()


def ext_leq(x: ExtElem, y: ExtElem) -> bool:
    """Natural partial order on the extension.

    Group elements are minimal: Group(k) sits below exactly the shift-k
    maps and itself; distinct Group elements are incomparable; a map is
    never below a Group element.
    """
    if isinstance(x, Group):
        return x == y if isinstance(y, Group) else y.pi == x.k
    return isinstance(y, PartialIso) and leq(x, y)


@dataclass(frozen=True)
class UpSet:
    """Truncated up-set plus a flag saying whether the truncation is everything."""

    elements: tuple[ExtElem, ...]
    complete: bool


def _sort_key(e: ExtElem):
    if isinstance(e, Group):
        return (0, e.k, (), 0)
    return (1, 0, e.excluded, e.shift)


def _subsets(points) -> list[tuple[int, ...]]:
    pts = tuple(points)
    return [c for r in range(len(pts) + 1) for c in combinations(pts, r)]


def up_set_truncated(x: ExtElem, params: NoiseParams, bound: int) -> UpSet:
    """All y >= x whose excluded set fits inside {1..bound}.

    For a map this is the whole (finite) up-set as soon as bound reaches
    tail_start - 1; for a Group element the up-set is infinite and the
    truncation is never complete.
    """
    if isinstance(x, Group):
        members: list[ExtElem] = [x]
        for ex in _subsets(range(1, bound + 1)):
            try:
                g = PartialIso(ex, x.k)
            except InvalidShift:
                continue
            if noise_bounded(g, params.j):
                members.append(g)
        return UpSet(tuple(sorted(members, key=_sort_key)), complete=False)
    _check_member(x, params)
    members = []
    for ex in _subsets(e for e in x.excluded if e <= bound):
        try:
            g = PartialIso(ex, x.shift)
        except InvalidShift:
            continue
        if noise_bounded(g, params.j):
            members.append(g)
    complete = not x.excluded or x.excluded[-1] <= bound
    return UpSet(tuple(sorted(members, key=_sort_key)), complete)


def _require_above_zero(x: ExtElem, params: Optional[NoiseParams]) -> None:
    _check_member(x, params)
    if isinstance(x, Group):
        if x.k != 0:
            raise NotInUpSet(f"{x!r} is not above grp(0)")
    elif x.shift != 0:
        raise NotInUpSet(f"{x!r} has shift {x.shift}, not above grp(0)")


def translate_right(x: ExtElem, k: int, params: Optional[NoiseParams] = None) -> ExtElem:
    """Right-multiply by the k-step forward shift: up-set of 0 -> up-set of k.

    Inverted by right-multiplying with BETA^k.
    """
    if k < 1:
        raise ValueError("step count must be >= 1")
    _require_above_zero(x, params)
    return ext_mul(x, ALPHA ** k, params)


def translate_left(x: ExtElem, k: int, params: Optional[NoiseParams] = None) -> ExtElem:
    """Left-multiply by the k-step backward shift: up-set of 0 -> up-set of -k.

    Inverted by left-multiplying with ALPHA^k.
    """
    if k < 1:
        raise ValueError("step count must be >= 1")
    _require_above_zero(x, params)
    return ext_mul(BETA ** k, x, params)
