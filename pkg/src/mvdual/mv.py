"""Finite MV-algebras presented as products of finite chains.

An algebra is given by a finite multiset with finite denominators: point
``w`` with denominator ``ν_d`` contributes the chain ``S_d = {0, 1/d, ..., 1}``.
Elements are numerator tuples in presentation point order, so ``(1, 2)`` in
``S_2 × S_3`` is ``(1/2, 2/3)``.  Elements are ordered lexicographically and
indexed by mixed radix; operation tables are numpy arrays over that index.

Homomorphisms are found by search, never by the duality formula, so they can
serve as an independent oracle for it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Mapping, Sequence

import numpy as np

from . import supernat as sn
from .errors import BudgetExceeded, DomainError
from .multiset import FiniteMultiset, multiset

AXIOM_BUDGET = 512
HOM_BUDGET = 10**7

Element = tuple[int, ...]


@lru_cache(maxsize=None)
def _tables(moduli: tuple[int, ...]):
    """Element array, ⊕ table, ¬ table for the product of chains ``S_n``."""
    n = np.array(moduli, dtype=np.int64)
    rows = list(product(*[range(m + 1) for m in moduli]))
    elems = np.array(rows, dtype=np.int64).reshape(len(rows), len(moduli))
    strides = np.array([math.prod(m + 1 for m in moduli[i + 1:]) for i in range(len(moduli))], dtype=np.int64)
    summed = np.minimum(elems[:, None, :] + elems[None, :, :], n)
    oplus = (summed @ strides).astype(np.int32)
    neg = ((n - elems) @ strides).astype(np.int32)
    for a in (elems, oplus, neg):
        a.setflags(write=False)
    return elems, oplus, neg, strides


@dataclass(frozen=True)
class FiniteMVAlgebra:
    """``∏_w S_{d(w)}`` over the points ``w`` of ``presentation``."""

    presentation: FiniteMultiset
    moduli: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        bad = [x for x, d in zip(self.presentation.points, self.presentation.denoms) if not d.is_finite]
        if bad:
            raise DomainError(f"MV-algebra presentation needs finite denominators; infinite at {bad}")
        object.__setattr__(self, "moduli", tuple(d.to_int() for d in self.presentation.denoms))

    @property
    def size(self) -> int:
        return math.prod(m + 1 for m in self.moduli)

    def __len__(self) -> int:
        return self.size

    def elements(self) -> list[Element]:
        return [tuple(int(v) for v in row) for row in _tables(self.moduli)[0]]

    def index(self, x: Element) -> int:
        self.check(x)
        return int(np.dot(x, _tables(self.moduli)[3])) if self.moduli else 0

    def element_at(self, i: int) -> Element:
        return tuple(int(v) for v in _tables(self.moduli)[0][i])

    def check(self, x) -> Element:
        x = tuple(x)
        if len(x) != len(self.moduli) or any(
                isinstance(k, bool) or not isinstance(k, (int, np.integer)) or not 0 <= k <= n
                for k, n in zip(x, self.moduli)):
            raise DomainError(f"{x!r} is not an element of {self}")
        return x

    def generators(self) -> list[Element]:
        """The atoms ``1/d(w)`` at a single coordinate ``w``."""
        k = len(self.moduli)
        return [tuple(int(i == j) for j in range(k)) for i in range(k)]

    def as_fractions(self, x: Element) -> tuple[Fraction, ...]:
        return tuple(Fraction(k, n) for k, n in zip(self.check(x), self.moduli))

    def tables(self) -> "OperationTables":
        elems, oplus, neg, _ = _tables(self.moduli)
        return OperationTables(len(elems), oplus, neg, 0)

    def __str__(self) -> str:
        return " × ".join(f"S_{n}" for n in self.moduli) or "trivial"


def chain(n: int) -> FiniteMVAlgebra:
    if n < 1:
        raise DomainError("S_n needs n >= 1")
    return FiniteMVAlgebra(multiset([n]))


def chain_product(ns: Sequence[int]) -> FiniteMVAlgebra:
    return FiniteMVAlgebra(multiset(list(ns)))


def zero(A: FiniteMVAlgebra) -> Element:
    return (0,) * len(A.moduli)


def oplus(A: FiniteMVAlgebra, x: Element, y: Element) -> Element:
    x, y = A.check(x), A.check(y)
    return tuple(min(a + b, n) for a, b, n in zip(x, y, A.moduli))


def neg(A: FiniteMVAlgebra, x: Element) -> Element:
    return tuple(n - a for a, n in zip(A.check(x), A.moduli))


def leq_el(A: FiniteMVAlgebra, x: Element, y: Element) -> bool:
    """``x <= y`` iff ``¬(¬x ⊕ y) ⊕ y == y``."""
    return oplus(A, neg(A, oplus(A, neg(A, x), y)), y) == A.check(y)


# -- axioms -----------------------------------------------------------------------


@dataclass(frozen=True)
class OperationTables:
    """Index-level ⊕, ¬ and 0, so that tampered operations can be checked too."""

    size: int
    oplus: np.ndarray
    neg: np.ndarray
    zero: int


AXIOMS = ("associativity", "zero_identity", "involution", "absorption", "characteristic", "commutativity")


@dataclass(frozen=True)
class AxiomReport:
    size: int
    results: dict[str, tuple[bool, tuple[int, ...] | None]]

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.results.values())

    def failures(self) -> list[str]:
        return [k for k, (ok, _) in self.results.items() if not ok]


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    bad = np.argwhere(~mask)
    return tuple(int(v) for v in bad[0]) if len(bad) else None


def check_tables(t: OperationTables) -> AxiomReport:
    """Exhaustively check the MV axioms; witnesses are element indices."""
    T, N, z = t.oplus, t.neg, t.zero
    idx = np.arange(t.size)
    res = {}

    assoc_witness = None
    for x in range(t.size):
        lhs = T[T[x]]  # (x ⊕ y) ⊕ z over all y, z
        rhs = T[x][T]  # x ⊕ (y ⊕ z)
        w = _first(lhs == rhs)
        if w is not None:
            assoc_witness = (x, *w)
            break
    res["associativity"] = (assoc_witness is None, assoc_witness)
    res["zero_identity"] = _verdict(T[:, z] == idx)
    res["involution"] = _verdict(N[N] == idx)
    top = N[z]
    res["absorption"] = _verdict(T[top] == top)
    # ¬(¬x ⊕ y) ⊕ y  ==  ¬(¬y ⊕ x) ⊕ x
    inner = N[T[N][:, idx]]  # inner[x, y] = ¬(¬x ⊕ y)
    lhs = T[inner, idx[None, :]]
    res["characteristic"] = _verdict(lhs == lhs.T)
    res["commutativity"] = _verdict(T == T.T)
    return AxiomReport(t.size, res)


def _verdict(mask: np.ndarray):
    w = _first(mask)
    return (w is None, w)


def check_mv_axioms(A: FiniteMVAlgebra, budget: int = AXIOM_BUDGET) -> AxiomReport:
    if A.size > budget:
        raise BudgetExceeded("axiom check algebra size", A.size, budget)
    return check_tables(A.tables())


def mutate_mod_one(A: FiniteMVAlgebra) -> OperationTables:
    """⊕ replaced by addition modulo 1, componentwise."""
    elems, _, neg_t, strides = _tables(A.moduli)
    n = np.array(A.moduli, dtype=np.int64)
    wrapped = (elems[:, None, :] + elems[None, :, :]) % np.maximum(n, 1)
    return OperationTables(len(elems), (wrapped @ strides).astype(np.int32), neg_t, 0)


def mutate_entry(A: FiniteMVAlgebra, seed: int = 0) -> tuple[OperationTables, tuple[int, int]]:
    """⊕ with one off-diagonal entry replaced by a different element (seeded)."""
    t = A.tables()
    if t.size < 2:
        raise DomainError("need at least two elements to mutate")
    rng = np.random.default_rng(seed)
    x, y = (int(v) for v in rng.choice(t.size, size=2, replace=False))
    table = t.oplus.copy()
    table[x, y] = (table[x, y] + 1 + int(rng.integers(t.size - 1))) % t.size
    return OperationTables(t.size, table, t.neg, t.zero), (x, y)


# -- homomorphisms ----------------------------------------------------------------


@dataclass(frozen=True)
class MVHomomorphism:
    """A map ``dom -> cod`` fixed by the images of the generators of ``dom``.

    ``images[w]`` is the image of the atom at coordinate ``w``; the value at
    ``x = Σ k_w · atom_w`` is the truncated sum ``min(n_j, Σ k_w · images[w][j])``
    in every codomain coordinate ``j``.  Every homomorphism has this form;
    :meth:`is_homomorphism` decides whether a given one preserves ⊕, ¬ and 0.
    """

    dom: FiniteMVAlgebra
    cod: FiniteMVAlgebra
    images: tuple[Element, ...]

    def __post_init__(self):
        if len(self.images) != len(self.dom.moduli):
            raise DomainError("need one image per generator")
        for y in self.images:
            self.cod.check(y)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(y[j] for y in self.images)

    def __call__(self, x: Element) -> Element:
        return self._apply(self.dom.check(x))

    def _apply(self, x: Element) -> Element:
        return tuple(min(n, sum(k * y[j] for k, y in zip(x, self.images)))
                     for j, n in enumerate(self.cod.moduli))

    def table(self) -> np.ndarray:
        """Codomain element index of the image of every domain element."""
        elems = _tables(self.dom.moduli)[0]
        strides = _tables(self.cod.moduli)[3]
        out = np.zeros(len(elems), dtype=np.int64)
        for j, n in enumerate(self.cod.moduli):
            out += _component_values(elems, self.column(j), n) * strides[j]
        return out

    def is_homomorphism(self) -> bool:
        return all(_component_is_hom(self.dom.moduli, n, self.column(j))
                   for j, n in enumerate(self.cod.moduli))


def _component_values(elems: np.ndarray, b: Sequence[int], n: int) -> np.ndarray:
    if elems.shape[1] == 0:
        return np.zeros(len(elems), dtype=np.int64)
    return np.minimum(elems @ np.array(b, dtype=np.int64), n)


@lru_cache(maxsize=None)
def _component_is_hom(moduli: tuple[int, ...], n: int, b: tuple[int, ...]) -> bool:
    """Full check that ``x ↦ min(n, Σ k_w b_w)`` is a homomorphism into ``S_n``."""
    elems, T, N, _ = _tables(moduli)
    H = _component_values(elems, b, n)
    if H[0] != 0 or not np.array_equal(H[N], n - H):
        return False
    return bool(np.array_equal(H[T], np.minimum(H[:, None] + H[None, :], n)))


@lru_cache(maxsize=None)
def chain_homs(moduli: tuple[int, ...], n: int) -> tuple[tuple[int, ...], ...]:
    """All homomorphisms ``∏ S_{m_w} -> S_n`` as generator images, lexicographic.

    Candidates range over every assignment of generator images; ¬ and ⊕ with
    a generator are screened for all candidates at once, survivors get the
    full ⊕ table check.
    """
    elems, T, N, _ = _tables(moduli)
    k = len(moduli)
    rows = list(product(range(n + 1), repeat=k))
    cands = np.array(rows, dtype=np.int64).reshape(len(rows), k)
    H = np.minimum(cands @ elems.T, n) if k else np.zeros((1, len(elems)), dtype=np.int64)
    ok = (H[:, 0] == 0) & np.all(H[:, N] == n - H, axis=1)
    for w in range(k):
        g = int(np.dot(np.eye(k, dtype=np.int64)[w], _tables(moduli)[3]))
        shifted = H[:, T[:, g]]
        ok &= np.all(shifted == np.minimum(H + H[:, [g]], n), axis=1)
    return tuple(tuple(int(v) for v in cands[i]) for i in np.flatnonzero(ok)
                 if _component_is_hom(moduli, n, tuple(int(v) for v in cands[i])))


def hom_search_space(A: FiniteMVAlgebra, B: FiniteMVAlgebra) -> int:
    """Candidate maps examined by :func:`enumerate_homs_bruteforce`, one chain factor at a time."""
    return sum((n + 1) ** len(A.moduli) for n in B.moduli)


def enumerate_homs_bruteforce(A: FiniteMVAlgebra, B: FiniteMVAlgebra,
                              budget: int = HOM_BUDGET) -> list[MVHomomorphism]:
    """Every homomorphism ``A -> B``, in lexicographic order of generator images.

    A map into a product is a homomorphism iff each coordinate is, so the
    search runs per chain factor of ``B`` and the results are combined.
    """
    need = hom_search_space(A, B)
    if need > budget:
        raise BudgetExceeded("MV hom search space", need, budget)
    per_factor = [chain_homs(A.moduli, n) for n in B.moduli]
    out = []
    for cols in product(*per_factor):
        images = tuple(tuple(col[w] for col in cols) for w in range(len(A.moduli)))
        out.append(MVHomomorphism(A, B, images))
    return sorted(out, key=lambda h: h.images)


def enumerate_homs_naive(A: FiniteMVAlgebra, B: FiniteMVAlgebra, budget: int = HOM_BUDGET) -> list[np.ndarray]:
    """Literal search over all ``|B|^|A|`` maps of element indices (tiny algebras only)."""
    need = B.size ** A.size
    if need > budget:
        raise BudgetExceeded("naive MV hom search space", need, budget)
    TA, NA = A.tables().oplus, A.tables().neg
    TB, NB = B.tables().oplus, B.tables().neg
    found = []
    for table in product(range(B.size), repeat=A.size):
        h = np.array(table)
        if h[0] == 0 and np.array_equal(h[NA], NB[h]) and np.array_equal(h[TA], TB[h[:, None], h[None, :]]):
            found.append(h)
    return found


def compose_homs(h2: MVHomomorphism, h1: MVHomomorphism) -> MVHomomorphism:
    """``h2 ∘ h1``."""
    if h1.cod != h2.dom:
        raise DomainError("homomorphisms do not compose")
    # images of h1 are validated elements of h2.dom already
    return MVHomomorphism(h1.dom, h2.cod, tuple(h2._apply(y) for y in h1.images))


def identity_hom(A: FiniteMVAlgebra) -> MVHomomorphism:
    return MVHomomorphism(A, A, tuple(A.generators()))


def hom_exists_chain(m: int, n: int) -> bool:
    if m < 1 or n < 1:
        raise DomainError("chains need m, n >= 1")
    return n % m == 0


# -- JSON -------------------------------------------------------------------------


def element_to_json(A: FiniteMVAlgebra, x: Element) -> dict:
    return {w: [k, n] for w, k, n in zip(A.presentation.points, A.check(x), A.moduli)}


def element_from_json(A: FiniteMVAlgebra, obj: Mapping[str, Sequence[int]]) -> Element:
    if set(obj) != set(A.presentation.points):
        raise DomainError("element must give a fraction for every presentation point")
    out = []
    for w, n in zip(A.presentation.points, A.moduli):
        k, d = obj[w]
        # accept any fraction that lives in S_n
        if d <= 0 or (k * n) % d:
            raise DomainError(f"{k}/{d} is not in S_{n}")
        out.append(k * n // d)
    return A.check(out)


def hom_to_json(h: MVHomomorphism) -> dict:
    return {
        "dom": [str(sn.from_natural(n)) for n in h.dom.moduli],
        "cod": [str(sn.from_natural(n)) for n in h.cod.moduli],
        "generators": {w: element_to_json(h.cod, y) for w, y in zip(h.dom.presentation.points, h.images)},
    }
