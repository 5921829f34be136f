"""Registered property suites over exhaustive bounded enumerations.

Each suite replays one algebraic fact against every instance the bounds
allow and reports pass/fail with counterexamples.  verify() is the
single entry point; the bounds pick the enumeration budget and params
carries the noise bound for the suites that need one.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional

from .bicyclic import BicyclicNF, embed, normalize_word, parse_word, recognize, reduce_word, word_iso
from .core import (
    ALPHA,
    BETA,
    IDENTITY,
    InvalidShift,
    NoiseParams,
    NotIdempotent,
    PartialIso,
    boundary_set,
    d_witness,
    green_d,
    green_h,
    green_j,
    green_l,
    green_r,
    group_congruence_witness,
    group_congruent,
    in_offset_class,
    in_offset_class_range,
    leq,
    make,
    noise_bounded,
    tail_chain,
)
from .extension import (
    Group,
    NotInUpSet,
    ext_inv,
    ext_leq,
    ext_mul,
    ext_pi,
    translate_left,
    translate_right,
    up_set_truncated,
)
from .oracle import EnumBounds, compose_via_window, enumerate_elements
from .topology import (
    NbhdSpec,
    TailSeqSpec,
    converges,
    empirical_converges,
    nbhd_member,
    nbhd_upset_agreement,
)


class UnknownProperty(ValueError):
    """No suite registered under the requested identifier."""


@dataclass(frozen=True)
class Report:
    property_id: str
    description: str
    passed: bool
    instances: int
    counterexamples: tuple = ()


_CAP = 5


class _Tally:
    """Counts checked instances and keeps the first few failures."""

    def __init__(self) -> None:
        self.instances = 0
        self.failures = 0
        self.bad: list = []

    def check(self, ok, *info) -> bool:
        self.instances += 1
        if not ok:
            self.failures += 1
            if len(self.bad) < _CAP:
                self.bad.append(tuple(repr(x) for x in info))
        return bool(ok)


_REGISTRY: dict[str, tuple[str, Callable]] = {}


def register(property_id: str, description: str):
    def deco(fn):
        _REGISTRY[property_id] = (description, fn)
        return fn
    return deco


def known_properties() -> tuple[str, ...]:
    return tuple(sorted(_REGISTRY))


def verify(property_id: str, bounds: EnumBounds, params: Optional[NoiseParams] = None) -> Report:
    if property_id not in _REGISTRY:
        raise UnknownProperty(
            f"{property_id!r} is not registered; known: {', '.join(known_properties())}"
        )
    description, fn = _REGISTRY[property_id]
    tally = _Tally()
    fn(tally, bounds, params)
    return Report(
        property_id,
        description,
        tally.failures == 0,
        tally.instances,
        tuple(tally.bad),
    )


def _params_j(params: Optional[NoiseParams], default: int) -> int:
    return params.j if params is not None else default


def _all_offset_sets(j: int) -> list[frozenset]:
    menu = range(2, j + 1)
    return [frozenset(c) for r in range(j) for c in combinations(menu, r)]


# -- element algebra ------------------------------------------------------


@register("assoc", "composition is associative on every enumerated triple")
def _assoc(t, bounds, params):
    elems = list(enumerate_elements(bounds))
    for a in elems:
        for b in elems:
            ab = a * b
            for c in elems:
                t.check(ab * c == a * (b * c), a, b, c)


@register("inverse_axioms", "x*x~*x == x, x~*x*x~ == x~, and partial identities commute")
def _inverse_axioms(t, bounds, params):
    elems = list(enumerate_elements(bounds))
    for g in elems:
        gi = g.inverse()
        t.check(g * gi * g == g, g)
        t.check(gi * g * gi == gi, g)
        t.check(gi.inverse() == g, g)
    idems = [g for g in elems if g.is_idempotent]
    for e in idems:
        for f in idems:
            t.check(e * f == f * e, e, f)


@register("oracle_equiv", "algebraic composition matches the pointwise window oracle on all pairs")
def _oracle_equiv(t, bounds, params):
    elems = list(enumerate_elements(bounds))
    for a in elems:
        for b in elems:
            t.check(compose_via_window(a, b) == a * b, a, b)


@register("idempotent_iff", "idempotency, being square-fixed, and having shift 0 coincide")
def _idempotent_iff(t, bounds, params):
    for g in enumerate_elements(bounds):
        square_fixed = g * g == g
        t.check(g.is_idempotent == square_fixed, g)
        t.check(square_fixed == (g.shift == 0), g)
        if g.is_idempotent:
            t.check(g.inverse() == g, g)


@register("green_relations", "the five Green predicates match their idempotent and witness forms")
def _green_relations(t, bounds, params):
    elems = list(enumerate_elements(bounds))
    span = bounds.n + bounds.s + 1
    for a in elems:
        dom_id_a = a * a.inverse()
        ran_id_a = a.inverse() * a
        for b in elems:
            is_l = green_l(a, b)
            is_r = green_r(a, b)
            t.check(is_l == (dom_id_a == b * b.inverse()), a, b)
            t.check(is_r == (ran_id_a == b.inverse() * b), a, b)
            t.check(green_h(a, b) == (is_l and is_r), a, b)
            t.check(green_h(a, b) == (a == b), a, b)
            # some element shares a's domain and b's range iff the
            # domains are translates of one another
            linked = green_d(a, b)
            exists = False
            for shift in range(-span, span + 1):
                try:
                    c = PartialIso(a.excluded, shift)
                except InvalidShift:
                    continue
                if green_r(c, b):
                    exists = True
                    break
            t.check(linked == exists, a, b)
            if linked:
                w = d_witness(a, b)
                t.check(
                    w is not None
                    and w.excluded == a.excluded
                    and w.inverse().excluded == b.excluded
                    and w.noise == a.noise,
                    a, b, w,
                )
            # a two-sided witness pair carrying a onto b always exists
            t.check(green_j(a, b), a, b)
            lift = a.tail_start - b.dom_min
            x = PartialIso(b.excluded, lift)
            y = make(range(1, a.ran_tail_start), b.shift - lift - a.shift)
            t.check(x * a * y == b, a, b, x, y)


@register("natural_order", "the four formulations of the natural order coincide and order the monoid")
def _natural_order(t, bounds, params):
    elems = list(enumerate_elements(bounds))
    for a in elems:
        t.check(leq(a, a), a)
        ran_id_a = a.inverse() * a
        for b in elems:
            by_def = leq(a, b)
            dom_incl = a.shift == b.shift and set(b.excluded) <= set(a.excluded)
            ran_incl = a.shift == b.shift and set(b.inverse().excluded) <= set(a.inverse().excluded)
            by_restriction = a == b * ran_id_a
            t.check(by_def == dom_incl, a, b)
            t.check(by_def == ran_incl, a, b)
            t.check(by_def == by_restriction, a, b)
            if by_def and leq(b, a):
                t.check(a == b, a, b)
            if by_def:
                t.check(leq(a.inverse(), b.inverse()), a, b)
                for c in elems:
                    t.check(leq(a * c, b * c) and leq(c * a, c * b), a, b, c)


@register("congruence", "shift equality is the least group congruence, with explicit witnesses")
def _congruence(t, bounds, params):
    elems = list(enumerate_elements(bounds))
    for a in elems:
        for b in elems:
            related = group_congruent(a, b)
            t.check(related == (a.pi == b.pi), a, b)
            w = group_congruence_witness(a, b)
            if related:
                t.check(w is not None and w.is_idempotent and w * a == w * b, a, b, w)
            else:
                probe = make(range(1, max(a.tail_start, b.tail_start)), 0)
                t.check(w is None and probe * a != probe * b, a, b)
            t.check((a * b).pi == a.pi + b.pi, a, b)
    idems = [g for g in elems if g.is_idempotent]
    for e in idems:
        for f in idems:
            t.check(group_congruent(e, f), e, f)


@register("retraction", "tail restriction is an idempotent homomorphism onto the noise-free part")
def _retraction(t, bounds, params):
    elems = list(enumerate_elements(bounds))
    for g in elems:
        r = g.tail()
        t.check(r.noise == 0, g)
        t.check(r == make(range(1, g.tail_start), g.shift), g)
        t.check(r.tail() == r, g)
        if g.noise == 0:
            t.check(r == g, g)
        t.check(r.inverse() == g.inverse().tail(), g)
        ri = r.inverse()
        t.check(g * ri == r * ri, g)
        t.check(ri * g == ri * r, g)
    for a in elems:
        ta = a.tail()
        for b in elems:
            t.check((a * b).tail() == ta * b.tail(), a, b)


# -- noise and offset classes ---------------------------------------------


@register("offset_classes", "domain- and range-side offset conditions agree; extremes collapse")
def _offset_classes(t, bounds, params):
    j = _params_j(params, 3)
    elems = list(enumerate_elements(bounds))
    sets_ = _all_offset_sets(j)
    for m_set in sets_:
        p = NoiseParams(j, m_set)
        for g in elems:
            t.check(in_offset_class(g, p) == in_offset_class_range(g, p), g, m_set)
    empty = NoiseParams(j)
    full = NoiseParams.full(j)
    for g in elems:
        t.check(in_offset_class(g, empty) == (g.noise == 0), g)
        t.check(in_offset_class(g, full) == noise_bounded(g, j), g)
    for m1 in sets_:
        for m2 in sets_:
            if m1 < m2:
                p1, p2 = NoiseParams(j, m1), NoiseParams(j, m2)
                for g in elems:
                    t.check(not in_offset_class(g, p1) or in_offset_class(g, p2), g, m1, m2)
                m = min(m2 - m1)
                w = make(range(2, m + 1), 0)
                t.check(in_offset_class(w, p2) and not in_offset_class(w, p1), w, m1, m2)


@register("class_closure", "every offset class is closed under products and inverses")
def _class_closure(t, bounds, params):
    j = _params_j(params, 3)
    elems = list(enumerate_elements(bounds))
    for m_set in _all_offset_sets(j):
        p = NoiseParams(j, m_set)
        t.check(in_offset_class(IDENTITY, p), m_set)
        members = [g for g in elems if in_offset_class(g, p)]
        for g in members:
            t.check(in_offset_class(g.inverse(), p), g, m_set)
        for a in members:
            for b in members:
                t.check(in_offset_class(a * b, p), a, b, m_set)


@register("noise_one_absent", "no element has noise exactly 1")
def _noise_one_absent(t, bounds, params):
    seen = set()
    for g in enumerate_elements(bounds):
        t.check(g.noise != 1, g)
        seen.add(g.noise)
    t.check(0 in seen, sorted(seen))
    if bounds.n >= 2:
        t.check(2 in seen, sorted(seen))


@register("series_strict", "the noise filtration is strict at every level from 2 up")
def _series_strict(t, bounds, params):
    for j in range(2, 6):
        w = make(range(2, j + 1), 0)
        t.check(w.noise == j, w, j)
        t.check(noise_bounded(w, j) and not noise_bounded(w, j - 1), w, j)
    for g in enumerate_elements(bounds):
        for j in range(2, 6):
            t.check(not noise_bounded(g, j - 1) or noise_bounded(g, j), g, j)


# -- absorption, collapsing chains, the boundary --------------------------


@register("absorption", "the basepoint identity is absorbed exactly off the point 1, on both sides")
def _absorption(t, bounds, params):
    ba = BETA * ALPHA
    t.check(ba == PartialIso((1,), 0), ba)
    for g in enumerate_elements(bounds):
        t.check((ba * g == g) == (not g.defined_at(1)), g)
        t.check((g * ba == g) == (not g.hits(1)), g)


@register("tail_chain", "the collapsing chain turns any partial identity into a plain tail identity")
def _tail_chain(t, bounds, params):
    # the chain at depth d flattens the idempotents of the noise-d monoid;
    # above that noise the head can outrun the d-step sweep
    for depth in (2, 3, 4):
        for e in enumerate_elements(EnumBounds(bounds.n, bounds.s, depth)):
            if not e.is_idempotent:
                continue
            t.check(tail_chain(e, depth) == make(range(1, e.tail_start + depth), 0), e, depth)
    shifted = [g for g in enumerate_elements(bounds) if g.shift != 0]
    if shifted:
        try:
            tail_chain(shifted[0], 2)
            t.check(False, shifted[0])
        except NotIdempotent:
            t.check(True, shifted[0])


@register("conjugation", "shift conjugation moves a partial identity's head up and keeps its noise")
def _conjugation(t, bounds, params):
    for e in enumerate_elements(bounds):
        if not e.is_idempotent:
            continue
        for k in range(1, 5):
            c = BETA ** k * e * ALPHA ** k
            expected = make(tuple(range(1, k + 1)) + tuple(x + k for x in e.excluded), 0)
            t.check(c == expected, e, k)
            t.check(c * c == c, e, k)
            t.check(c.tail_start == e.tail_start + k, e, k)
            t.check(c.dom_min == e.dom_min + k, e, k)
            t.check(c.noise == e.noise, e, k)


@register("boundary", "the two-sided non-absorbed set matches its brute-force computation")
def _boundary(t, bounds, params):
    j = _params_j(params, 3)
    t.check(bounds.n >= j, bounds.n, j)  # the sweep must reach every candidate point
    ba = BETA * ALPHA
    listed = boundary_set(j)
    t.check(len(listed) == 2 ** (j - 1), j, len(listed))
    brute = [
        g
        for g in enumerate_elements(EnumBounds(bounds.n, bounds.s, j))
        if ba * g != g and g * ba != g
    ]
    t.check(len(brute) == len(set(brute)), j)
    t.check(set(brute) == set(listed), j, sorted(set(brute) ^ set(listed)))


# -- the adjoined integer ideal -------------------------------------------


def _ext_universe(bounds, params):
    j = _params_j(params, 2)
    isos = list(enumerate_elements(EnumBounds(bounds.n, bounds.s, j)))
    reach = bounds.s + 1
    return isos + [Group(k) for k in range(-reach, reach + 1)], NoiseParams(j)


@register("ext_assoc", "the extended product is associative across maps and adjoined integers")
def _ext_assoc(t, bounds, params):
    univ, p = _ext_universe(bounds, params)
    for x in univ:
        for y in univ:
            xy = ext_mul(x, y, p)
            for z in univ:
                t.check(ext_mul(xy, z, p) == ext_mul(x, ext_mul(y, z, p), p), x, y, z)


@register("ext_ideal", "adjoined integers absorb every product and the shift total is additive")
def _ext_ideal(t, bounds, params):
    univ, p = _ext_universe(bounds, params)
    for x in univ:
        for y in univ:
            prod = ext_mul(x, y, p)
            if isinstance(x, Group) or isinstance(y, Group):
                t.check(isinstance(prod, Group), x, y)
            t.check(ext_pi(prod) == ext_pi(x) + ext_pi(y), x, y)


@register("ext_order", "the extended order is a partial order obeying the level rules")
def _ext_order(t, bounds, params):
    univ, _ = _ext_universe(bounds, params)
    for x in univ:
        t.check(ext_leq(x, x), x)
        for y in univ:
            le = ext_leq(x, y)
            if le and ext_leq(y, x):
                t.check(x == y, x, y)
            if isinstance(x, PartialIso) and isinstance(y, PartialIso):
                t.check(le == leq(x, y), x, y)
            if isinstance(x, Group) and isinstance(y, PartialIso):
                t.check(le == (y.pi == x.k), x, y)
                t.check(not ext_leq(y, x), x, y)
            if isinstance(x, Group) and isinstance(y, Group) and x != y:
                t.check(not le, x, y)
            if le:
                for z in univ:
                    if ext_leq(y, z):
                        t.check(ext_leq(x, z), x, y, z)


@register("ext_commute", "adjoined integers commute with every element")
def _ext_commute(t, bounds, params):
    univ, p = _ext_universe(bounds, params)
    for x in univ:
        for k in range(-2, 3):
            t.check(ext_mul(Group(k), x, p) == ext_mul(x, Group(k), p), x, k)


@register("ext_surjective", "pushing all maps down to the zero level fills the reachable levels")
def _ext_surjective(t, bounds, params):
    univ, p = _ext_universe(bounds, params)
    isos = [g for g in univ if isinstance(g, PartialIso)]
    image = {ext_mul(Group(0), g, p) for g in isos}
    expected = {Group(k) for k in range(-bounds.s, bounds.s + 1)}
    t.check(image == expected, sorted(image), sorted(expected))


@register("ext_translation", "level translations are injective, level-true, and undone by the opposite shift")
def _ext_translation(t, bounds, params):
    j = _params_j(params, 2)
    p = NoiseParams(j)
    base = up_set_truncated(Group(0), p, bounds.n)
    for k in range(1, 4):
        seen_right, seen_left = set(), set()
        for x in base.elements:
            tr = translate_right(x, k, p)
            t.check(ext_leq(Group(k), tr), x, k, tr)
            t.check(ext_mul(tr, BETA ** k, p) == x, x, k, tr)
            seen_right.add(tr)
            tl = translate_left(x, k, p)
            t.check(ext_leq(Group(-k), tl), x, k, tl)
            t.check(ext_mul(ALPHA ** k, tl, p) == x, x, k, tl)
            seen_left.add(tl)
        t.check(len(seen_right) == len(base.elements), k)
        t.check(len(seen_left) == len(base.elements), k)
    try:
        translate_right(ALPHA, 1, p)
        t.check(False, ALPHA)
    except NotInUpSet:
        t.check(True, ALPHA)


# -- neighborhood filters -------------------------------------------------


def _topo_pool(bounds, params):
    j = _params_j(params, 2)
    isos = list(enumerate_elements(EnumBounds(bounds.n, max(bounds.s, 3))))
    return j, isos + [Group(k) for k in range(-3, 4)]


@register("nbhd_nesting", "neighborhoods shrink as the base index grows")
def _nbhd_nesting(t, bounds, params):
    j, pool = _topo_pool(bounds, params)
    for m_set in _all_offset_sets(j):
        p = NoiseParams(j, m_set)
        for k in range(-2, 3):
            for i in range(1, 7):
                inner = NbhdSpec(k, i + 1, p)
                outer = NbhdSpec(k, i, p)
                for x in pool:
                    t.check(not nbhd_member(x, inner) or nbhd_member(x, outer), x, k, i, m_set)


@register("nbhd_inversion", "members invert into the mirrored neighborhood at the shifted index")
def _nbhd_inversion(t, bounds, params):
    j, pool = _topo_pool(bounds, params)
    for m_set in _all_offset_sets(j):
        p = NoiseParams(j, m_set)
        for k in range(-2, 3):
            for i in range(1, 7):
                spec = NbhdSpec(k, i, p)
                mirror = NbhdSpec(-k, max(1, i + k), p)
                for x in pool:
                    t.check(
                        nbhd_member(x, spec) == nbhd_member(ext_inv(x), mirror),
                        x, k, i, m_set,
                    )


def _members_by_level(pool, i, p):
    by_k = defaultdict(list)
    for x in pool:
        if isinstance(x, Group):
            by_k[x.k].append(x)
        elif x.tail_start >= i and in_offset_class(x, p):
            by_k[x.shift].append(x)
    return by_k


@register("nbhd_translation", "translation carries neighborhoods into the predicted ones, once past the head")
def _nbhd_translation(t, bounds, params):
    j, pool = _topo_pool(bounds, params)
    movers = list(enumerate_elements(EnumBounds(2, 2)))
    for m_set in _all_offset_sets(j):
        p = NoiseParams(j, m_set)
        for gam in movers:
            head = gam.tail_start - 1
            reach = max(head, head + gam.shift)
            for i in range(reach + j + 1, reach + j + 3):
                by_k = _members_by_level(pool, i, p)
                for k in range(-2, 3):
                    left_target = NbhdSpec(gam.pi + k, max(1, i - gam.pi), p)
                    right_target = NbhdSpec(k + gam.pi, i, p)
                    check_right = i > reach + j + max(0, -k)
                    for x in by_k.get(k, []):
                        t.check(
                            nbhd_member(ext_mul(gam, x), left_target),
                            gam, x, k, i, m_set,
                        )
                        if check_right:
                            t.check(
                                nbhd_member(ext_mul(x, gam), right_target),
                                gam, x, k, i, m_set,
                            )


@register("nbhd_product", "products of same-index members land in the summed-level neighborhood")
def _nbhd_product(t, bounds, params):
    j, pool = _topo_pool(bounds, params)
    for m_set in _all_offset_sets(j):
        p = NoiseParams(j, m_set)
        for i in range(j + 1, j + 3):
            by_k = _members_by_level(pool, i, p)
            for k1 in range(-2, 3):
                for k2 in range(-2, 3):
                    target = NbhdSpec(k1 + k2, i, p)
                    for x in by_k.get(k1, []):
                        for y in by_k.get(k2, []):
                            t.check(nbhd_member(ext_mul(x, y), target), x, y, k1, k2, i, m_set)


@register("nbhd_hausdorff", "neighborhoods of different levels never meet")
def _nbhd_hausdorff(t, bounds, params):
    j, pool = _topo_pool(bounds, params)
    for m_set in _all_offset_sets(j):
        p = NoiseParams(j, m_set)
        for k1 in range(-2, 3):
            for k2 in range(k1 + 1, 3):
                for i in (1, 3, 5):
                    s1, s2 = NbhdSpec(k1, i, p), NbhdSpec(k2, i, p)
                    for x in pool:
                        t.check(not (nbhd_member(x, s1) and nbhd_member(x, s2)), x, k1, k2, i)


@register("nbhd_monotone", "a larger offset set only enlarges each neighborhood")
def _nbhd_monotone(t, bounds, params):
    j, pool = _topo_pool(bounds, params)
    sets_ = _all_offset_sets(j)
    for m1 in sets_:
        for m2 in sets_:
            if not m1 < m2:
                continue
            for k in (-1, 0, 2):
                for i in (1, 4):
                    small = NbhdSpec(k, i, NoiseParams(j, m1))
                    large = NbhdSpec(k, i, NoiseParams(j, m2))
                    for x in pool:
                        t.check(not nbhd_member(x, small) or nbhd_member(x, large), x, m1, m2, k, i)


@register("upset_char", "the index cutoff equals exclusion from the cutoff witness's up-set")
def _upset_char(t, bounds, params):
    j = _params_j(params, 2)
    for m_set in _all_offset_sets(j):
        p = NoiseParams(j, m_set)
        for k in range(-2, 3):
            for i in range(2, 9):
                t.check(nbhd_upset_agreement(k, i, p, n_max=bounds.n), k, i, m_set)


@register("convergence_probe", "closed-form convergence verdicts match the direct neighborhood probe")
def _convergence_probe(t, bounds, params):
    j = _params_j(params, 3)
    kept_menu = [frozenset(c) for r in range(j) for c in combinations(range(2, j + 1), r)]
    for kept in kept_menu:
        for shift in range(-2, 3):
            spec = TailSeqSpec(kept, shift)
            for m_set in _all_offset_sets(j):
                p = NoiseParams(j, m_set)
                for k in range(-2, 3):
                    t.check(
                        converges(spec, k, p) == empirical_converges(spec, k, p),
                        spec, k, m_set,
                    )


# -- bicyclic normal forms ------------------------------------------------


@register("bicyclic_hom", "normal-form products match map composition through the embedding")
def _bicyclic_hom(t, bounds, params):
    nfs = [BicyclicNF(k, l) for k in range(7) for l in range(7)]
    for u in nfs:
        t.check(recognize(embed(u)) == u, u)
        for v in nfs:
            t.check(embed(u * v) == embed(u) * embed(v), u, v)
    for g in enumerate_elements(bounds):
        nf = recognize(g)
        t.check((nf is None) == (g.noise != 0), g)
        if nf is not None:
            t.check(embed(nf) == g, g, nf)


@register("word_soundness", "random words normalize to the same element along every reduction route")
def _word_soundness(t, bounds, params):
    rng = random.Random(90125)
    t.check(normalize_word(parse_word("ab")) == BicyclicNF(0, 0), "ab")
    for _ in range(1000):
        word = tuple(rng.choice("ab") for _ in range(rng.randint(0, 20)))
        nf = normalize_word(word)
        t.check(word_iso(word) == embed(nf), "".join(word), nf)
        first = reduce_word(word)
        last = reduce_word(word, rightmost=True)
        t.check(first == last, "".join(word), first, last)
        t.check(first == "b" * nf.k + "a" * nf.l, "".join(word), first, nf)
