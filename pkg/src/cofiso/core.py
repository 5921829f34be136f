"""Exact algebra of cofinite partial shifts of the positive integers.

An injective partial self-map of {1, 2, 3, ...} that is defined off a
finite set and preserves all distances must be a translation
x -> x + shift on its whole domain: a reflection would eventually send
large points below 1.  An element is therefore stored losslessly as the
finite excluded set together with the shift, and every operation here is
exact integer arithmetic on that pair.

Composition is written left to right: ``a * b`` applies ``a`` first.
All values are immutable and all functions are pure.

>>> ALPHA * BETA == IDENTITY
True
>>> BETA * ALPHA
iso([1],0)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional


class InvalidShift(ValueError):
    """The shift would move the least domain point out of the positive integers."""


class NotIdempotent(ValueError):
    """The operation requires a partial identity (shift 0)."""


@dataclass(frozen=True, order=True)
class PartialIso:
    """A cofinite partial shift: x -> x + shift off the ``excluded`` set.

    ``excluded`` is strictly ascending; construction enforces
    shift >= 1 - dom_min so the range stays inside the positive integers.
    """

    excluded: tuple[int, ...] = ()
    shift: int = 0

    def __post_init__(self) -> None:
        prev = 0
        for e in self.excluded:
            if not isinstance(e, int) or e < 1:
                raise ValueError(f"excluded point {e!r} is not a positive integer")
            if e <= prev:
                raise ValueError("excluded points must be strictly ascending")
            prev = e
        if self.shift < 1 - self.dom_min:
            raise InvalidShift(
                f"shift {self.shift} sends the domain minimum {self.dom_min} below 1"
            )

    # -- structure ---------------------------------------------------------

    @property
    def dom_min(self) -> int:
        """Least point of the domain."""
        u = 1
        for e in self.excluded:
            if e != u:
                break
            u += 1
        return u

    @property
    def tail_start(self) -> int:
        """Least n with the whole ray [n, oo) inside the domain."""
        return self.excluded[-1] + 1 if self.excluded else 1

    @property
    def ran_min(self) -> int:
        return self.dom_min + self.shift

    @property
    def ran_tail_start(self) -> int:
        """Least n with [n, oo) inside the range; equals tail_start + shift."""
        return self.tail_start + self.shift

    @property
    def noise(self) -> int:
        """Length of the irregular head: tail_start - dom_min.  Never 1."""
        return self.tail_start - self.dom_min

    @property
    def pi(self) -> int:
        """Image under the projection onto the integer quotient group."""
        return self.shift

    @property
    def is_idempotent(self) -> bool:
        return self.shift == 0

    def defined_at(self, x: int) -> bool:
        return x >= 1 and x not in self.excluded

    def hits(self, y: int) -> bool:
        """True when y lies in the range."""
        return self.defined_at(y - self.shift)

    def apply(self, x: int) -> Optional[int]:
        return x + self.shift if self.defined_at(x) else None

    # -- algebra -----------------------------------------------------------

    def compose(self, other: "PartialIso") -> "PartialIso":
        """Apply self first, then other.

        Defined where self is defined and the image lands in other's
        domain, so the composite excludes self.excluded plus the pullback
        of other.excluded; shifts add.  The result always satisfies the
        construction invariant.
        """
        ex = set(self.excluded)
        for e in other.excluded:
            if e - self.shift >= 1:
                ex.add(e - self.shift)
        return PartialIso(tuple(sorted(ex)), self.shift + other.shift)

    __mul__ = compose

    def inverse(self) -> "PartialIso":
        ex = set(range(1, self.shift + 1))
        for e in self.excluded:
            if e + self.shift >= 1:
                ex.add(e + self.shift)
        return PartialIso(tuple(sorted(ex)), -self.shift)

    def __pow__(self, n: int) -> "PartialIso":
        base = self if n >= 0 else self.inverse()
        out = IDENTITY
        for _ in range(abs(n)):
            out = out.compose(base)
        return out

    def tail(self) -> "PartialIso":
        """Restriction to [tail_start, oo): the noise-0 part.

        This is a retraction onto the bicyclic submonoid and a
        homomorphism: (a * b).tail() == a.tail() * b.tail().
        """
        return PartialIso(tuple(range(1, self.tail_start)), self.shift)

    def __repr__(self) -> str:
        return f"iso([{','.join(map(str, self.excluded))}],{self.shift})"


IDENTITY = PartialIso()
ALPHA = PartialIso((), 1)      # x -> x + 1, defined everywhere
BETA = PartialIso((1,), -1)    # x -> x - 1, defined on [2, oo)


def make(excluded: Iterable[int], shift: int) -> PartialIso:
    """Canonicalizing constructor: sorts and deduplicates the excluded set."""
    return PartialIso(tuple(sorted(set(excluded))), shift)


def punctured_identity(i: int) -> PartialIso:
    """Identity of the positive integers with the single point i removed."""
    if i < 1:
        raise ValueError("puncture index must be >= 1")
    return PartialIso((i,), 0)


@dataclass(frozen=True)
class NoiseParams:
    """Ambient noise bound j plus the offset set selecting a subsemigroup.

    ``offsets`` must sit inside {2, ..., j}.  The empty set selects the
    bicyclic submonoid, the full set {2..j} the whole noise-j monoid.
    """

    j: int
    offsets: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "offsets", frozenset(self.offsets))
        if self.j < 0:
            raise ValueError("noise bound must be >= 0")
        for m in sorted(self.offsets):
            if not 2 <= m <= self.j:
                raise ValueError(f"offset {m} outside 2..{self.j}")

    @classmethod
    def full(cls, j: int) -> "NoiseParams":
        """Widest offset set {2, ..., j}."""
        return cls(j, frozenset(range(2, j + 1)))


# -- natural order and the group congruence -------------------------------


def leq(a: PartialIso, b: PartialIso) -> bool:
    """Natural partial order: a is b restricted to a smaller domain."""
    return a.shift == b.shift and set(b.excluded) <= set(a.excluded)


def group_congruent(a: PartialIso, b: PartialIso) -> bool:
    """Minimum group congruence; holds exactly when the shifts agree."""
    return a.shift == b.shift


def group_congruence_witness(a: PartialIso, b: PartialIso) -> Optional[PartialIso]:
    """A partial identity e with e*a == e*b, or None when not congruent.

    The identity of the common tail [max(tail_start), oo) always works.
    """
    if a.shift != b.shift:
        return None
    return PartialIso(tuple(range(1, max(a.tail_start, b.tail_start))), 0)


# -- Green's relations ----------------------------------------------------


def green_l(a: PartialIso, b: PartialIso) -> bool:
    """Equal domains."""
    return a.excluded == b.excluded


def green_r(a: PartialIso, b: PartialIso) -> bool:
    """Equal ranges."""
    return a.inverse().excluded == b.inverse().excluded


def green_h(a: PartialIso, b: PartialIso) -> bool:
    return a == b


def _gap_pattern(g: PartialIso) -> tuple[int, ...]:
    # excluded points above dom_min, re-based at dom_min: a translation
    # invariant that determines the domain up to translation
    u = g.dom_min
    return tuple(e - u for e in g.excluded if e > u)


def green_d(a: PartialIso, b: PartialIso) -> bool:
    """The domains are translates of each other."""
    return _gap_pattern(a) == _gap_pattern(b)


def d_witness(a: PartialIso, b: PartialIso) -> Optional[PartialIso]:
    """Partial shift carrying dom(a) onto dom(b), or None.

    Shares a's excluded set, hence a's noise; the shift is forced by the
    domain minima and is always admissible.
    """
    if not green_d(a, b):
        return None
    return PartialIso(a.excluded, b.dom_min - a.dom_min)


def green_j(a: PartialIso, b: PartialIso) -> bool:
    """Always true: the monoid has a single two-sided ideal class."""
    return True


# -- noise classes --------------------------------------------------------


def noise_bounded(g: PartialIso, j: int) -> bool:
    return g.noise <= j


def head_offsets(g: PartialIso) -> tuple[int, ...]:
    """Distances from early domain points back to tail_start (0 included)."""
    ts = g.tail_start
    return tuple(ts - x for x in range(1, ts + 1) if g.defined_at(x))


def in_offset_class(g: PartialIso, params: NoiseParams) -> bool:
    """Every domain point below tail_start sits at an allowed offset."""
    return noise_bounded(g, params.j) and all(
        o == 0 or o in params.offsets for o in head_offsets(g)
    )


def in_offset_class_range(g: PartialIso, params: NoiseParams) -> bool:
    """Range-side form of the offset condition (equivalent to the domain side)."""
    if not noise_bounded(g, params.j):
        return False
    rts = g.ran_tail_start
    for y in range(1, rts + 1):
        if g.hits(y):
            o = rts - y
            if o != 0 and o not in params.offsets:
                return False
    return True


# -- collapsing chains and the boundary -----------------------------------


def tail_chain(e: PartialIso, depth: int) -> PartialIso:
    """Product e * (BETA*e)^depth * ALPHA^depth.

    For a partial identity e this collapses all head irregularity: the
    result is the plain identity of [tail_start + depth, oo).
    """
    if e.shift != 0:
        raise NotIdempotent(f"{e!r} has shift {e.shift}")
    if depth < 2:
        raise ValueError("depth must be >= 2")
    acc = e
    for _ in range(depth):
        acc = acc * BETA * e
    for _ in range(depth):
        acc = acc * ALPHA
    return acc


def boundary_set(j: int) -> tuple[PartialIso, ...]:
    """Partial identities defined at 1 with noise at most j.

    Exactly the elements of the noise-j monoid that neither left nor
    right multiplication by BETA*ALPHA leaves fixed; the excluded set
    ranges over the subsets of {2, ..., j}, so there are 2^(j-1).
    """
    if j < 2:
        raise ValueError("noise bound must be >= 2")
    out = [
        PartialIso(c, 0)
        for r in range(j)
        for c in combinations(range(2, j + 1), r)
    ]
    return tuple(sorted(out))
