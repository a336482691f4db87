"""The finite duality between multisets with finite denominators and finite MV-algebras.

Objects: a multiset ``X`` presents ``∏_x S_{d(x)}``.  Arrows: ``f: X -> Y``
gives ``f*: A_Y -> A_X`` with ``f*(e)_x = e_{f(x)}`` read in ``S_{d(x)}``,
which is possible because ``d(f(x))`` divides ``d(x)``.  Hom-sets are
compared in the orientation ``Hom(X, Y) ≅ Hom(A_Y, A_X)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, InternalError
from .multiset import FiniteMultiset, MultisetArrow, compose, enumerate_homs, identity, is_finitely_copresentable
from .mv import (
    HOM_BUDGET,
    FiniteMVAlgebra,
    MVHomomorphism,
    compose_homs,
    enumerate_homs_bruteforce,
    identity_hom,
)


def algebra_of(X: FiniteMultiset) -> FiniteMVAlgebra:
    if not is_finitely_copresentable(X):
        raise DomainError("only multisets with finite denominators present finite MV-algebras")
    return FiniteMVAlgebra(X)


def dual_arrow(f: MultisetArrow) -> MVHomomorphism:
    """``f*: algebra_of(cod f) -> algebra_of(dom f)``."""
    A_Y, A_X = algebra_of(f.cod), algebra_of(f.dom)
    # the atom 1/d(y) at y goes to d(x)/d(y) at every x over y
    images = tuple(
        tuple(A_X.moduli[x] // A_Y.moduli[y] if f.images[x] == y else 0 for x in range(len(A_X.moduli)))
        for y in range(len(A_Y.moduli))
    )
    h = MVHomomorphism(A_Y, A_X, images)
    if not h.is_homomorphism():
        raise InternalError(f"dual of {f} is not a homomorphism")
    return h


@dataclass(frozen=True)
class HomBijection:
    count_ms: int
    count_mv: int
    bijection: bool
    witness: dict | None = None

    def as_dict(self) -> dict:
        return {"count_ms": self.count_ms, "count_mv": self.count_mv, "bijection": self.bijection,
                "witness": self.witness}


def check_hom_bijection(X: FiniteMultiset, Y: FiniteMultiset, budget: int = HOM_BUDGET) -> HomBijection:
    """Compare ``Hom_MS(X, Y)`` with ``Hom_MV(A_Y, A_X)`` found by search."""
    ms = enumerate_homs(X, Y)
    mv = enumerate_homs_bruteforce(algebra_of(Y), algebra_of(X), budget)
    duals: dict[tuple, MultisetArrow] = {}
    for f in ms:
        key = dual_arrow(f).images
        if key in duals:
            return HomBijection(len(ms), len(mv), False,
                                {"collision": [duals[key].mapping, f.mapping]})
        duals[key] = f
    found = {h.images for h in mv}
    missing = sorted(found - set(duals))
    extra = sorted(set(duals) - found)
    ok = not missing and not extra
    witness = None if ok else {"mv_without_preimage": missing[:1], "duals_not_found": extra[:1]}
    return HomBijection(len(ms), len(mv), ok, witness)


def check_functoriality(f: MultisetArrow, g: MultisetArrow,
                        dual: Callable[[MultisetArrow], MVHomomorphism] = dual_arrow) -> bool:
    """``(g ∘ f)* == f* ∘ g*``; pass a memoized ``dual`` when sweeping many pairs."""
    return dual(compose(g, f)) == compose_homs(dual(f), dual(g))


def check_identity(X: FiniteMultiset) -> bool:
    return dual_arrow(identity(X)) == identity_hom(algebra_of(X))
