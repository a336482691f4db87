"""Quotients of multisets as multiset relations, and co-relations.

A multiset relation on ``X`` is a partition of its points together with a
class-constant ``mu <= ζ``.  Epis out of ``X`` and multiset relations on
``X`` determine each other: an epi gives its fibres and ``ζ_Y ∘ f``; a
relation gives the quotient map onto its classes with denominators ``mu``.

A co-relation is a jointly epic pair ``q0, q1: X ⇉ S``.  The diagrams used
for its properties are fixed here:

* reflexive: some ``d: S -> X`` has ``d ∘ q0 = d ∘ q1 = 1_X``;
* symmetric: some ``s: S -> S`` has ``s ∘ q0 = q1`` and ``s ∘ q1 = q0``;
* transitive: with ``(Q, κ0, κ1)`` the pushout of ``q1`` and ``q0`` (so
  ``κ0 ∘ q1 = κ1 ∘ q0``), some ``t: S -> Q`` has ``t ∘ q0 = κ0 ∘ q0`` and
  ``t ∘ q1 = κ1 ∘ q1``.

Because ``q0, q1`` are jointly epic each witness is unique when it exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Mapping, Sequence

from . import supernat as sn
from .errors import BoundaryMismatch, DomainError, InternalError, PreconditionError
from .mscat import cokernel_pair, copair, pushout, quotient_by_classes
from .multiset import (
    FiniteMultiset,
    MultisetArrow,
    classify,
    compose,
    divisor_closure,
    enumerate_homs,
    factor_through_epi,
    fibers,
    generate_multisets,
    identity,
    to_json as ms_to_json,
)
from .supernat import Supernatural, leq


@dataclass(frozen=True)
class MultisetRelation:
    """``classes`` partition ``base.points``; ``mu[i]`` belongs to ``base.points[i]``."""

    base: FiniteMultiset
    classes: tuple[tuple[str, ...], ...]
    mu: tuple[Supernatural, ...]

    def __post_init__(self):
        X = self.base
        order = {x: i for i, x in enumerate(X.points)}
        seen = [x for c in self.classes for x in c]
        if sorted(seen, key=lambda x: order.get(x, -1)) != list(X.points) or not all(self.classes):
            raise DomainError("classes must partition the base points")
        canon = tuple(sorted((tuple(sorted(c, key=order.__getitem__)) for c in self.classes),
                             key=lambda c: order[c[0]]))
        object.__setattr__(self, "classes", canon)
        if len(self.mu) != len(X):
            raise DomainError("mu must be defined on every point")
        bad = [x for x, m, d in zip(X.points, self.mu, X.denoms) if not leq(m, d)]
        if bad:
            raise DomainError(f"mu exceeds ζ at {bad}")
        for c in self.classes:
            if len({self.mu[order[x]] for x in c}) != 1:
                raise DomainError(f"mu is not constant on class {list(c)}")

    def class_of(self, x: str) -> tuple[str, ...]:
        return next(c for c in self.classes if x in c)

    def mu_of(self, x: str) -> Supernatural:
        return self.mu[self.base.index(x)]


def relation_of_epi(f: MultisetArrow) -> MultisetRelation:
    if not classify(f).epic:
        raise DomainError("relation_of_epi needs a surjective arrow")
    X = f.dom
    classes = tuple(tuple(X.points[i] for i in fib) for fib in fibers(f))
    return MultisetRelation(X, classes, tuple(f.cod.denoms[j] for j in f.images))


def epi_of_relation(r: MultisetRelation) -> MultisetArrow:
    """Quotient map onto the classes; a class is named after its first point and has denominator ``mu``."""
    X = r.base
    idx = [[X.index(x) for x in c] for c in r.classes]
    Q, q = quotient_by_classes(X, idx)
    Q = FiniteMultiset(Q.points, tuple(r.mu[c[0]] for c in idx))
    return MultisetArrow(X, Q, q.images)


def relation_leq(r1: MultisetRelation, r2: MultisetRelation) -> bool:
    """``~1 ⊆ ~2`` and ``mu1 >= mu2`` pointwise."""
    if r1.base != r2.base:
        raise BoundaryMismatch("relations live on different multisets")
    refines = all(set(c) <= set(r2.class_of(c[0])) for c in r1.classes)
    return refines and all(leq(b, a) for a, b in zip(r1.mu, r2.mu))


def _partitions(n: int):
    """Restricted growth strings of length ``n``, lexicographic."""
    def grow(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(top + 2):
            yield from grow(prefix + [b], max(top, b))
    if n == 0:
        yield ()
        return
    yield from grow([0], 0)


def enumerate_relations(X: FiniteMultiset,
                        mu_universe: Mapping[str, Sequence[Supernatural]] | Sequence[Supernatural] | None = None
                        ) -> list[MultisetRelation]:
    """Every multiset relation on ``X``.

    ``mu`` on a class ranges over the divisors of the meet of its
    denominators, or over ``mu_universe`` (one list for all points or a list
    per point) filtered by ``<= ζ``.  Required when some ``ζ`` is infinite.
    """
    def universe(x: str) -> list[Supernatural] | None:
        if mu_universe is None:
            return None
        if isinstance(mu_universe, Mapping):
            return list(mu_universe.get(x, []))
        return list(mu_universe)

    if mu_universe is None and not all(d.is_finite for d in X.denoms):
        raise PreconditionError(["mu_universe is required for infinite denominators"])
    out = []
    for rgs in _partitions(len(X)):
        blocks: list[list[int]] = [[] for _ in range(max(rgs, default=-1) + 1)]
        for i, b in enumerate(rgs):
            blocks[b].append(i)
        choices = []
        for blk in blocks:
            bound = sn.meet(X.denoms[i] for i in blk)
            if mu_universe is None:
                cands = sn.divisor_values(bound)
            else:
                pools = [universe(X.points[i]) for i in blk]
                cands = [m for m in pools[0] if all(m in p for p in pools[1:]) and leq(m, bound)]
                cands = sorted(set(cands), key=lambda m: pools[0].index(m))
            choices.append(cands)
        for pick in product(*choices):
            mu = [None] * len(X)
            for blk, m in zip(blocks, pick):
                for i in blk:
                    mu[i] = m
            classes = tuple(tuple(X.points[i] for i in blk) for blk in blocks)
            out.append(MultisetRelation(X, classes, tuple(mu)))
    return out


def enumerate_epis(X: FiniteMultiset, targets: Sequence[FiniteMultiset]) -> list[MultisetArrow]:
    return [f for Y in targets for f in enumerate_homs(X, Y) if classify(f).epic]


@dataclass(frozen=True)
class IsoReport:
    passed: bool
    relations: int
    epis: int
    witness: dict | None = None


def check_quot_cs_iso(X: FiniteMultiset, probes: Sequence[FiniteMultiset] | None = None,
                      mu_universe=None,
                      order: Callable[[MultisetRelation, MultisetRelation], bool] = relation_leq) -> IsoReport:
    """Check that relations and epis out of ``X`` correspond as ordered sets.

    ``probes`` are the codomains used to list epis (default: every multiset
    on at most ``|X|`` points over the divisors of ``X``'s denominators).
    The quotient order is "``f2`` factors through ``f1``"; ``order`` is the
    relation order under test.
    """
    if probes is None:
        probes = generate_multisets(len(X), divisor_closure([X]), include_empty=True)
    rels = enumerate_relations(X, mu_universe)
    epis = enumerate_epis(X, probes)

    def fail(**w):
        return IsoReport(False, len(rels), len(epis), w)

    quotients = [epi_of_relation(r) for r in rels]
    for r, q in zip(rels, quotients):
        if not classify(q).epic or relation_of_epi(q) != r:
            return fail(relation=relation_to_json(r), reason="relation -> epi -> relation is not the identity")
    for f in epis:
        q = epi_of_relation(relation_of_epi(f))
        eps = factor_through_epi(q, f)
        if eps is None or not classify(eps).iso:
            return fail(epi=f.mapping, reason="epi is not isomorphic to the quotient by its relation")
    for (r1, q1), (r2, q2) in product(list(zip(rels, quotients)), repeat=2):
        if order(r1, r2) != (factor_through_epi(q1, q2) is not None):
            return fail(pair=[relation_to_json(r1), relation_to_json(r2)], reason="orders disagree on relations")
    rel_of = [relation_of_epi(f) for f in epis]
    for (f1, s1), (f2, s2) in product(list(zip(epis, rel_of)), repeat=2):
        if order(s1, s2) != (factor_through_epi(f1, f2) is not None):
            return fail(pair=[f1.mapping, f2.mapping], reason="orders disagree on epis")
    return IsoReport(True, len(rels), len(epis))


def order_without_mu(r1: MultisetRelation, r2: MultisetRelation) -> bool:
    """Partition refinement alone (a deliberately wrong order, used as a mutation)."""
    return all(set(c) <= set(r2.class_of(c[0])) for c in r1.classes)


# -- co-relations -----------------------------------------------------------------


@dataclass(frozen=True)
class CoRelation:
    q0: MultisetArrow
    q1: MultisetArrow

    def __post_init__(self):
        if self.q0.dom != self.q1.dom or self.q0.cod != self.q1.cod:
            raise BoundaryMismatch("q0 and q1 must be parallel")
        for q in (self.q0, self.q1):
            if not q.is_valid():
                raise DomainError("q0 and q1 must be arrows")
        if set(self.q0.images) | set(self.q1.images) != set(range(len(self.target))):
            raise DomainError("q0 and q1 are not jointly epic")

    @property
    def base(self) -> FiniteMultiset:
        return self.q0.dom

    @property
    def target(self) -> FiniteMultiset:
        return self.q0.cod


@dataclass(frozen=True)
class Witnessed:
    holds: bool
    witness: MultisetArrow | None = None


def _search(homs, pred) -> Witnessed:
    for h in homs:
        if pred(h):
            return Witnessed(True, h)
    return Witnessed(False)


def reflexive_by_search(c: CoRelation) -> Witnessed:
    one = identity(c.base)
    return _search(enumerate_homs(c.target, c.base),
                   lambda d: compose(d, c.q0) == one and compose(d, c.q1) == one)


def associated_relation(c: CoRelation) -> MultisetRelation:
    """The relation on ``X + X`` of the copairing ``[q0, q1]``."""
    return relation_of_epi(copair([c.q0, c.q1])[1])


def reflexive_by_relation(c: CoRelation) -> bool:
    """Related points of ``X + X`` come from the same point of ``X``, and ``mu`` equals ``ζ_X`` there."""
    r = associated_relation(c)
    X, n = c.base, len(c.base)

    def origin(i: int) -> int:
        return i % n

    idx = {x: i for i, x in enumerate(r.base.points)}
    for cls in r.classes:
        if len({origin(idx[p]) for p in cls}) > 1:
            return False
    return all(r.mu[i] == X.denoms[origin(i)] for i in range(2 * n))


def is_reflexive(c: CoRelation) -> Witnessed:
    found = reflexive_by_search(c)
    if found.holds != reflexive_by_relation(c):
        raise InternalError("reflexivity routes disagree")
    return found


def is_symmetric(c: CoRelation) -> Witnessed:
    return _search(enumerate_homs(c.target, c.target),
                   lambda s: compose(s, c.q0) == c.q1 and compose(s, c.q1) == c.q0)


def is_transitive(c: CoRelation) -> Witnessed:
    _, (k0, k1) = pushout(c.q1, c.q0)
    a, b = compose(k0, c.q0), compose(k1, c.q1)
    return _search(enumerate_homs(c.target, k0.cod),
                   lambda t: compose(t, c.q0) == a and compose(t, c.q1) == b)


@dataclass(frozen=True)
class EffectiveReport:
    passed: bool
    Y: FiniteMultiset
    inclusion: MultisetArrow
    comparison: MultisetArrow | None


def effectivize(c: CoRelation) -> EffectiveReport:
    """Recover ``c`` as the cokernel pair of the inclusion of ``{x : q0(x) = q1(x)}``."""
    if not is_reflexive(c).holds:
        raise PreconditionError(["co-relation is not reflexive"])
    X = c.base
    keep = [i for i in range(len(X)) if c.q0.images[i] == c.q1.images[i]]
    Y = FiniteMultiset(tuple(X.points[i] for i in keep), tuple(X.denoms[i] for i in keep))
    m = MultisetArrow(Y, X, tuple(keep))
    _, (k0, k1) = cokernel_pair(m)
    _, joint = copair([k0, k1])
    _, given = copair([c.q0, c.q1])
    phi = factor_through_epi(joint, given)
    ok = phi is not None and classify(phi).iso
    return EffectiveReport(ok, Y, m, phi)


def enumerate_corelations(X: FiniteMultiset, targets: Sequence[FiniteMultiset]) -> list[CoRelation]:
    out = []
    for S in targets:
        homs = enumerate_homs(X, S)
        for q0, q1 in product(homs, repeat=2):
            if set(q0.images) | set(q1.images) == set(range(len(S))):
                out.append(CoRelation(q0, q1))
    return out


# -- JSON -------------------------------------------------------------------------


def relation_to_json(r: MultisetRelation) -> dict:
    return {
        "base": ms_to_json(r.base),
        "classes": [list(c) for c in r.classes],
        "mu": {x: sn.to_json(m) for x, m in zip(r.base.points, r.mu)},
    }


def relation_from_json(obj, resolve) -> MultisetRelation:
    if not isinstance(obj, dict) or not {"base", "classes", "mu"} <= set(obj):
        raise DomainError("a relation is an object with 'base', 'classes' and 'mu'")
    X = resolve(obj["base"])
    mu = tuple(sn.from_json(obj["mu"][x]) for x in X.points)
    return MultisetRelation(X, tuple(tuple(c) for c in obj["classes"]), mu)
