"""Neighborhood filters, convergence, and topology separation.

Every map is isolated; a basic neighborhood of the adjoined integer k
consists of k itself plus the offset-class members with shift k whose
irregular head has moved out beyond i.  Varying the offset set yields
pairwise distinct topologies, told apart by which tail sequences still
converge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    InvalidShift,
    NoiseParams,
    PartialIso,
    in_offset_class,
    leq,
    make,
)
from .extension import ExtElem, Group


class OffsetOutOfRange(ValueError):
    """Sequence index is too small for the kept-offset pattern and shift."""


class OutsideSpace(ValueError):
    """The tail sequence leaves the bounded-noise monoid."""


class NotDistinct(ValueError):
    """The two offset sets coincide, so no separating sequence exists."""


@dataclass(frozen=True)
class NbhdSpec:
    """Basic neighborhood of Group(k): the base point plus every
    offset-class member with shift k and tail_start >= i."""

    k: int
    i: int
    params: NoiseParams

    def __post_init__(self) -> None:
        if self.i < 1:
            raise ValueError("neighborhood index must be >= 1")


def nbhd_member(x: ExtElem, spec: NbhdSpec) -> bool:
    if isinstance(x, Group):
        return x.k == spec.k
    return x.shift == spec.k and x.tail_start >= spec.i and in_offset_class(x, spec.params)


@dataclass(frozen=True)
class TailSeqSpec:
    """Closed-form element sequence: at index n the domain is
    {n - m : m in kept_offsets} plus the tail [n, oo), moved by shift."""

    kept_offsets: frozenset[int] = frozenset()
    shift: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "kept_offsets", frozenset(self.kept_offsets))
        for m in sorted(self.kept_offsets):
            if m < 2:
                raise ValueError(f"kept offset {m} must be >= 2")

    @property
    def max_offset(self) -> int:
        return max(self.kept_offsets, default=0)


def min_index(spec: TailSeqSpec) -> int:
    """Smallest n at which the sequence element exists."""
    return max(1, spec.max_offset + 1, spec.max_offset + 1 - spec.shift)


def seq_elem(spec: TailSeqSpec, n: int) -> PartialIso:
    """The n-th element; tail_start is n and the head offsets are exactly
    the kept ones."""
    if n < min_index(spec):
        raise OffsetOutOfRange(f"need n >= {min_index(spec)}, got {n}")
    kept = {n - m for m in spec.kept_offsets}
    return PartialIso(tuple(x for x in range(1, n) if x not in kept), spec.shift)


def converges(spec: TailSeqSpec, k: int, params: NoiseParams) -> bool:
    """Closed form: the sequence converges to Group(k) iff the shift is k
    and every kept offset is allowed by the topology's offset set."""
    if spec.max_offset > params.j:
        raise OutsideSpace(
            f"kept offset {spec.max_offset} exceeds the noise bound {params.j}"
        )
    return spec.shift == k and spec.kept_offsets <= params.offsets


def empirical_converges(
    spec: TailSeqSpec,
    k: int,
    params: NoiseParams,
    depth: int = 20,
    horizon: int = 60,
) -> bool:
    """Probe convergence directly: for every neighborhood index up to
    depth, the sequence must sit inside the neighborhood over the whole
    closing stretch of the probe range.

    The last ten indices stand in for "eventually"; the n-th element has
    tail_start n, so membership at index i is the index-1 membership
    plus n >= i, and the per-element work is shared across all i.
    """
    if spec.max_offset > params.j:
        raise OutsideSpace(
            f"kept offset {spec.max_offset} exceeds the noise bound {params.j}"
        )
    start = min_index(spec)
    if horizon < start:
        raise ValueError(f"horizon {horizon} is below the first index {start}")
    base = NbhdSpec(k, 1, params)
    stretch = range(max(start, horizon - 9), horizon + 1)
    inside = {n: nbhd_member(seq_elem(spec, n), base) for n in stretch}
    for i in range(1, depth + 1):
        if not all(inside[n] and n >= i for n in stretch):
            return False
    return True


def distinguish(m1, m2, j: int) -> TailSeqSpec:
    """A tail sequence converging to Group(0) in exactly one of the two
    topologies given by offset sets m1 and m2."""
    s1, s2 = frozenset(m1), frozenset(m2)
    for m in sorted(s1 | s2):
        if not 2 <= m <= j:
            raise ValueError(f"offset {m} outside 2..{j}")
    diff = s1 ^ s2
    if not diff:
        raise NotDistinct("offset sets are equal")
    return TailSeqSpec(frozenset({min(diff)}), 0)


def cutoff_witness(k: int, i: int):
    """Largest shift-k element excluded from the index-i neighborhood:
    the noise-0 map with tail_start i - 1, when such an element exists.

    For negative k and small i no shift-k element has tail_start below i,
    the index constraint is vacuous, and there is nothing to cut: returns
    None.
    """
    if i < 2:
        raise ValueError("neighborhood index must be >= 2")
    try:
        return make(range(1, i - 1), k)
    except InvalidShift:
        return None


def nbhd_upset_agreement(k: int, i: int, params: NoiseParams, n_max: int = 8) -> bool:
    """Check, over a truncated enumeration, that the neighborhood equals
    {Group(k)} plus the shift-k offset-class members NOT above the cutoff
    witness (no cut when the witness does not exist)."""
    if i < 2:
        raise ValueError("neighborhood index must be >= 2")
    w = cutoff_witness(k, i)
    spec = NbhdSpec(k, i, params)
    for x in _candidates(k, n_max):
        base = nbhd_member(x, spec)
        if isinstance(x, Group):
            alt = x.k == k
        else:
            alt = (
                x.shift == k
                and in_offset_class(x, params)
                and (w is None or not leq(w, x))
            )
        if base != alt:
            return False
    return True


def _candidates(k: int, n_max: int):
    from itertools import combinations

    yield Group(k)
    yield Group(k + 1)
    pts = range(1, n_max + 1)
    for r in range(n_max + 1):
        for ex in combinations(pts, r):
            for s in (k - 1, k, k + 1):
                try:
                    yield PartialIso(ex, s)
                except InvalidShift:
                    continue
