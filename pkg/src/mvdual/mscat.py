"""Finite limits and colimits of finite multisets.

Limits are computed on underlying sets and given the join of the leg
denominators; colimits are computed on underlying sets and given the meet of
the denominators of all preimages under the legs.  Pullbacks and pushouts
are assembled from (co)products and (co)equalizers so only those two
denominator formulas exist in the code.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Sequence

from . import supernat as sn
from .errors import BoundaryMismatch, BudgetExceeded, DomainError, InternalError, PreconditionError
from .multiset import (
    FiniteMultiset,
    MultisetArrow,
    classify,
    compose,
    divisor_closure,
    enumerate_homs,
    generate_multisets,
    ArrowFlags,
)
from .supernat import ONE, Supernatural, leq

PRODUCT_BUDGET = 10**4


@dataclass(frozen=True)
class Diagram:
    """Objects plus arrows given as ``(source index, target index, arrow)``."""

    objects: tuple[FiniteMultiset, ...]
    arrows: tuple[tuple[int, int, MultisetArrow], ...] = ()


@dataclass(frozen=True)
class Construction:
    """A limit cone or colimit cocone over ``diagram``.

    ``legs[i]`` goes between ``apex`` and ``diagram.objects[i]``.  ``out`` is
    the part callers usually want (projections, an inclusion, a quotient
    arrow, a pair of arrows); iterating yields ``(apex, out)``.
    """

    kind: str  # "limit" or "colimit"
    diagram: Diagram
    apex: FiniteMultiset
    legs: tuple[MultisetArrow, ...]
    out: object

    def __iter__(self):
        return iter((self.apex, self.out))


def _limit_denoms(n: int, legs: Sequence[tuple[Sequence[Supernatural], Sequence[int]]]) -> tuple:
    # ζ(x) = ⋁_i ζ_{D(i)}(l_i(x)); legs given as (target denominators, images)
    return tuple(sn.join(ds[imgs[x]] for ds, imgs in legs) for x in range(n))


def _colimit_denoms(n: int, legs: Sequence[tuple[Sequence[Supernatural], Sequence[int]]]) -> tuple:
    # ζ(x) = ⋀ {ζ_{D(i)}(y) : l_i(y) = x}; legs given as (source denominators, images)
    pre: list[list[Supernatural]] = [[] for _ in range(n)]
    for ds, imgs in legs:
        for d, x in zip(ds, imgs):
            pre[x].append(d)
    if any(not p for p in pre):
        raise InternalError("colimit legs are not jointly surjective")
    return tuple(sn.meet(p) for p in pre)


def _pair_id(parts: Sequence[str]) -> str:
    return "(" + ",".join(parts) + ")"


def product(Xs: Sequence[FiniteMultiset]) -> Construction:
    """Cartesian product; a tuple's denominator is the join of its components'."""
    Xs = tuple(Xs)
    idx = list(cartesian(*[range(len(X)) for X in Xs]))
    pts = tuple(_pair_id([X.points[i] for X, i in zip(Xs, t)]) for t in idx)
    legs_data = [(X.denoms, [t[k] for t in idx]) for k, X in enumerate(Xs)]
    P = FiniteMultiset(pts, _limit_denoms(len(idx), legs_data))
    projections = tuple(MultisetArrow(P, X, tuple(t[k] for t in idx)) for k, X in enumerate(Xs))
    return Construction("limit", Diagram(Xs), P, projections, projections)


def coproduct(Xs: Sequence[FiniteMultiset]) -> Construction:
    """Disjoint union; point ``x`` of summand ``i`` becomes ``"i:x"``."""
    Xs = tuple(Xs)
    pts, offsets = [], []
    for i, X in enumerate(Xs):
        offsets.append(len(pts))
        pts.extend(f"{i}:{x}" for x in X.points)
    legs_data = [(X.denoms, [off + j for j in range(len(X))]) for X, off in zip(Xs, offsets)]
    C = FiniteMultiset(tuple(pts), _colimit_denoms(len(pts), legs_data))
    injections = tuple(MultisetArrow(X, C, tuple(imgs)) for X, (_, imgs) in zip(Xs, legs_data))
    return Construction("colimit", Diagram(Xs), C, injections, injections)


def _parallel(f: MultisetArrow, g: MultisetArrow):
    if f.dom != g.dom or f.cod != g.cod:
        raise BoundaryMismatch("arrows must be parallel")


def equalizer(f: MultisetArrow, g: MultisetArrow) -> Construction:
    _parallel(f, g)
    A, B = f.dom, f.cod
    keep = [i for i in range(len(A)) if f.images[i] == g.images[i]]
    n = len(keep)
    denoms = _limit_denoms(n, [(A.denoms, keep), (B.denoms, [f.images[i] for i in keep])])
    E = FiniteMultiset(tuple(A.points[i] for i in keep), denoms)
    e = MultisetArrow(E, A, tuple(keep))
    diagram = Diagram((A, B), ((0, 1, f), (0, 1, g)))
    return Construction("limit", diagram, E, (e, compose(f, e)), e)


def _classes(n: int, pairs) -> list[list[int]]:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for a in range(n):
        groups.setdefault(find(a), []).append(a)
    return sorted(groups.values())


def quotient_by_classes(B: FiniteMultiset, classes: Sequence[Sequence[int]],
                        extra_legs=()) -> tuple[FiniteMultiset, MultisetArrow]:
    """Quotient of ``B`` by a partition given as index lists.

    Each class is named after its first member; its denominator is the meet
    over the class and over any ``extra_legs`` ``(denominators, class indices)``.
    """
    classes = sorted(sorted(c) for c in classes)
    which = {}
    for k, c in enumerate(classes):
        for i in c:
            which[i] = k
    q_imgs = tuple(which[i] for i in range(len(B)))
    legs = [(B.denoms, q_imgs), *extra_legs]
    Q = FiniteMultiset(tuple(B.points[c[0]] for c in classes), _colimit_denoms(len(classes), legs))
    return Q, MultisetArrow(B, Q, q_imgs)


def coequalizer(f: MultisetArrow, g: MultisetArrow) -> Construction:
    """Quotient of the codomain by the equivalence generated by ``f(a) ~ g(a)``."""
    _parallel(f, g)
    A, B = f.dom, f.cod
    classes = _classes(len(B), zip(f.images, g.images))
    which = {i: k for k, c in enumerate(sorted(classes)) for i in c}
    Q, q = quotient_by_classes(B, classes, [(A.denoms, [which[j] for j in f.images])])
    diagram = Diagram((A, B), ((0, 1, f), (0, 1, g)))
    return Construction("colimit", diagram, Q, (compose(q, f), q), q)


def pullback(f: MultisetArrow, g: MultisetArrow) -> Construction:
    """Pullback of ``f: A -> C`` and ``g: B -> C``; ``out`` is ``(p0, p1)``."""
    if f.cod != g.cod:
        raise BoundaryMismatch("pullback needs a common codomain")
    P, (pa, pb) = product([f.dom, g.dom])
    E, e = equalizer(compose(f, pa), compose(g, pb))
    p0, p1 = compose(pa, e), compose(pb, e)
    diagram = Diagram((f.dom, g.dom, f.cod), ((0, 2, f), (1, 2, g)))
    return Construction("limit", diagram, E, (p0, p1, compose(f, p0)), (p0, p1))


def pushout(f: MultisetArrow, g: MultisetArrow) -> Construction:
    """Pushout of ``f: A -> B`` and ``g: A -> C``; ``out`` is ``(q0, q1)``."""
    if f.dom != g.dom:
        raise BoundaryMismatch("pushout needs a common domain")
    C, (i0, i1) = coproduct([f.cod, g.cod])
    Q, q = coequalizer(compose(i0, f), compose(i1, g))
    q0, q1 = compose(q, i0), compose(q, i1)
    diagram = Diagram((f.dom, f.cod, g.cod), ((0, 1, f), (0, 2, g)))
    return Construction("colimit", diagram, Q, (compose(q0, f), q0, q1), (q0, q1))


def kernel_pair(f: MultisetArrow) -> Construction:
    return pullback(f, f)


def cokernel_pair(m: MultisetArrow) -> Construction:
    return pushout(m, m)


# -- universal property ---------------------------------------------------------


@dataclass(frozen=True)
class UniversalCheck:
    passed: bool
    cones_checked: int
    witness: dict | None = None


def _commutes(c: Construction) -> dict | None:
    for i, leg in enumerate(c.legs):
        if not leg.is_valid():
            return {"leg": i, "reason": "leg is not an arrow", "points": leg.violations()}
    for s, t, a in c.diagram.arrows:
        if c.kind == "limit":
            lhs, rhs = compose(a, c.legs[s]), c.legs[t]
        else:
            lhs, rhs = compose(c.legs[t], a), c.legs[s]
        if lhs != rhs:
            return {"arrow": [s, t], "reason": "legs do not commute with the diagram"}
    return None


def _cones(c: Construction, P: FiniteMultiset):
    objs = c.diagram.objects
    if c.kind == "limit":
        homs = [enumerate_homs(P, D) for D in objs]
    else:
        homs = [enumerate_homs(D, P) for D in objs]
    for cone in cartesian(*homs):
        ok = True
        for s, t, a in c.diagram.arrows:
            if c.kind == "limit":
                ok = compose(a, cone[s]) == cone[t]
            else:
                ok = compose(cone[t], a) == cone[s]
            if not ok:
                break
        if ok:
            yield cone


def universal_property_check(c: Construction, probes: Sequence[FiniteMultiset]) -> UniversalCheck:
    """Every (co)cone with apex among ``probes`` factors through ``c`` exactly once."""
    bad = _commutes(c)
    if bad:
        return UniversalCheck(False, 0, bad)
    checked = 0
    for pi, P in enumerate(probes):
        if c.kind == "limit":
            mediators = Counter(tuple(compose(l, u).images for l in c.legs)
                                for u in enumerate_homs(P, c.apex))
        else:
            mediators = Counter(tuple(compose(u, l).images for l in c.legs)
                                for u in enumerate_homs(c.apex, P))
        for cone in _cones(c, P):
            checked += 1
            count = mediators.get(tuple(a.images for a in cone), 0)
            if count != 1:
                return UniversalCheck(False, checked, {
                    "probe": pi,
                    "probe_denominators": [str(d) for d in P.denoms],
                    "cone": [a.mapping for a in cone],
                    "mediators": count,
                })
    return UniversalCheck(True, checked)


def standard_probes(c: Construction, max_points: int = 2) -> list[FiniteMultiset]:
    """Probes with at most ``max_points`` points over the divisor closure of the instance."""
    ds = divisor_closure([*c.diagram.objects, c.apex])
    return generate_multisets(max_points, ds, include_empty=True)


# -- partitions and injectivity -------------------------------------------------


def partition_assign(points: Sequence[str], Ks: Sequence[set], Zs: Sequence[set]) -> dict[str, int]:
    """Assign each point an index ``i`` so that ``K_i ⊆ C_i ⊆ Z_i``.

    Points of some ``K_i`` get ``i``; every other point gets the least ``i``
    whose ``Z_i`` contains it.
    """
    if len(Ks) != len(Zs):
        raise PreconditionError(["need as many K sets as Z sets"])
    universe = set(points)
    problems = []
    owner: dict[str, int] = {}
    for i, K in enumerate(Ks):
        for x in sorted(K):
            if x not in universe:
                problems.append(f"K_{i} contains unknown point {x!r}")
            elif x in owner:
                problems.append(f"K_{owner[x]} and K_{i} share {x!r}")
            else:
                owner[x] = i
            if x not in Zs[i]:
                problems.append(f"K_{i} ⊄ Z_{i}: {x!r}")
    for x in points:
        if not any(x in Z for Z in Zs):
            problems.append(f"point {x!r} is not covered by any Z")
    if problems:
        raise PreconditionError(problems)
    return {x: owner[x] if x in owner else next(i for i, Z in enumerate(Zs) if x in Z)
            for x in points}


def extend_along_regular_mono(g: MultisetArrow, f: MultisetArrow) -> MultisetArrow:
    """Given regular mono ``g: B -> A`` and ``f: B -> X``, build ``h: A -> X`` with ``h ∘ g == f``.

    ``X`` must have only finite denominators and a point of denominator ν_1.
    """
    X, A = f.cod, g.cod
    problems = []
    if g.dom != f.dom:
        problems.append("g and f must share a domain")
    if not classify(g).regular_monic:
        problems.append("g is not regular monic (injective and denominator-preserving)")
    infinite = [x for x, d in zip(X.points, X.denoms) if not d.is_finite]
    if infinite:
        problems.append(f"X has points of infinite denominator: {infinite}")
    ones = [i for i, d in enumerate(X.denoms) if d == ONE]
    if not ones:
        problems.append("X has no point of denominator ν_1")
    if problems:
        raise PreconditionError(problems)

    # x_0 first, then the remaining points of X in order
    order = [ones[0]] + [i for i in range(len(X)) if i != ones[0]]
    Ks = [{A.points[g.images[b]] for b in range(len(f.dom)) if f.images[b] == xi} for xi in order]
    Zs = [{z for z, d in zip(A.points, A.denoms) if leq(X.denoms[xi], d)} for xi in order]
    try:
        assign = partition_assign(A.points, Ks, Zs)
    except PreconditionError as exc:
        raise InternalError(f"partition hypotheses failed: {exc}") from exc
    h = MultisetArrow(A, X, tuple(order[assign[z]] for z in A.points))
    if not h.is_valid() or compose(h, g) != f:
        raise InternalError("extension does not satisfy h∘g = f with decreasing denominators")
    return h


# -- canonical arrow into a product over hom-sets ------------------------------


@dataclass(frozen=True)
class CanonicalProfile:
    """The canonical arrow ``X -> ∏_{G, t ∈ Hom(X, G)} G`` described without building the product.

    ``index`` lists ``(member, t)``; ``denominators[x]`` is the denominator
    of the image of ``x``, i.e. the join of ``ζ_G(t(x))``.
    """

    X: FiniteMultiset
    index: tuple[tuple[int, MultisetArrow], ...]
    images: tuple[tuple[int, ...], ...]
    denominators: tuple[Supernatural, ...]
    product_size: int

    @property
    def injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    @property
    def not_preserved(self) -> list[str]:
        return [x for x, d, e in zip(self.X.points, self.X.denoms, self.denominators) if d != e]

    @property
    def preserves_denominators(self) -> bool:
        return not self.not_preserved


def canonical_profile(X: FiniteMultiset, family: Sequence[FiniteMultiset]) -> CanonicalProfile:
    index = tuple((k, t) for k, G in enumerate(family) for t in enumerate_homs(X, G))
    images = tuple(tuple(t.images[x] for _, t in index) for x in range(len(X)))
    denoms = tuple(sn.join(family[k].denoms[t.images[x]] for k, t in index) for x in range(len(X)))
    size = math.prod(len(family[k]) for k, _ in index)
    return CanonicalProfile(X, index, images, denoms, size)


@dataclass(frozen=True)
class CanonicalArrow:
    arrow: MultisetArrow
    index: tuple[tuple[int, MultisetArrow], ...]
    flags: ArrowFlags


def canonical_arrow_to_family(X: FiniteMultiset, family: Sequence[FiniteMultiset],
                              budget: int = PRODUCT_BUDGET) -> CanonicalArrow:
    """Materialize the product and the canonical arrow ``x -> (t(x))``."""
    prof = canonical_profile(X, family)
    if prof.product_size > budget:
        raise BudgetExceeded("canonical product size", prof.product_size, budget)
    P, _ = product([family[k] for k, _ in prof.index])
    radix = [len(family[k]) for k, _ in prof.index]

    def flat(img):
        pos = 0
        for r, i in zip(radix, img):
            pos = pos * r + i
        return pos

    h = MultisetArrow(X, P, tuple(flat(img) for img in prof.images))
    if not h.is_valid():
        raise InternalError("canonical arrow increases a denominator")
    return CanonicalArrow(h, prof.index, classify(h))


# -- coordinate dependence on finite products -----------------------------------


def dependency_coordinates(h: MultisetArrow, prod: Construction) -> list[int]:
    """Coordinates ``i`` such that two tuples differing only at ``i`` have different images."""
    if h.dom != prod.apex:
        raise BoundaryMismatch("h must start at the product apex")
    coords = [tuple(leg.images[x] for leg in prod.legs) for x in range(len(prod.apex))]
    where = {c: x for x, c in enumerate(coords)}
    out = []
    for i, X in enumerate(prod.diagram.objects):
        for x, c in enumerate(coords):
            if any(h.images[where[c[:i] + (v,) + c[i + 1:]]] != h.images[x] for v in range(len(X))):
                out.append(i)
                break
    return out


def factors_through_coordinates(h: MultisetArrow, prod: Construction, coords: Sequence[int]) -> bool:
    """Whether ``h`` is constant on tuples that agree on ``coords``."""
    seen: dict[tuple, int] = {}
    for x in range(len(prod.apex)):
        key = tuple(prod.legs[i].images[x] for i in coords)
        if seen.setdefault(key, h.images[x]) != h.images[x]:
            return False
    return True


__all__ = [
    "Construction", "Diagram", "UniversalCheck", "CanonicalArrow", "CanonicalProfile",
    "product", "coproduct", "equalizer", "coequalizer", "pullback", "pushout",
    "kernel_pair", "cokernel_pair", "universal_property_check", "standard_probes",
    "partition_assign", "extend_along_regular_mono", "canonical_profile",
    "canonical_arrow_to_family", "dependency_coordinates", "factors_through_coordinates",
    "quotient_by_classes", "copair",
]


def copair(fs: Sequence[MultisetArrow]) -> tuple[Construction, MultisetArrow]:
    """The coproduct of the domains of ``fs`` and the induced arrow into their common codomain."""
    if not fs:
        raise DomainError("copairing needs at least one arrow")
    cod = fs[0].cod
    if any(f.cod != cod for f in fs):
        raise BoundaryMismatch("copaired arrows need a common codomain")
    c = coproduct([f.dom for f in fs])
    return c, MultisetArrow(c.apex, cod, tuple(img for f in fs for img in f.images))
