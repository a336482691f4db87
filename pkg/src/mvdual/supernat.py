"""Supernatural numbers: functions from the primes to N ∪ {∞}.

Only eventually-constant functions whose default exponent is 0 or ∞ are
representable.  That class contains every ``ν_n``, every ``ν_{p^k}``, the
constant functions 0 and ∞, and is closed under finite joins and meets,
which is all the finite constructions ever produce.

Values are immutable and kept in canonical form, so ``==`` is equality of
functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Mapping

from sympy import divisors, factorint, isprime, nextprime

from .errors import CanonicalFormError, DomainError, NotPrimeError, UnknownIdentifier

INF = math.inf
Exponent = int | float  # a natural number, or INF


def _check_exponent(e: object) -> Exponent:
    if e == INF:
        return INF
    if isinstance(e, bool) or not isinstance(e, int) or e < 0:
        raise DomainError(f"exponent must be a natural number or INF, got {e!r}")
    return e


def _check_prime(p: object) -> int:
    if isinstance(p, bool) or not isinstance(p, int) or not isprime(p):
        raise NotPrimeError(f"{p!r} is not a prime")
    return p


@dataclass(frozen=True)
class Supernatural:
    """An eventually-constant map primes -> N ∪ {∞}.

    ``default`` is the exponent of every prime not listed in ``exceptions``;
    ``exceptions`` is a sorted tuple of ``(prime, exponent)`` pairs, none of
    which repeats the default.
    """

    default: Exponent = 0
    exceptions: tuple[tuple[int, Exponent], ...] = ()

    def __post_init__(self):
        if self.default not in (0, INF):
            raise CanonicalFormError("default exponent must be 0 or INF")
        last = 1
        for p, e in self.exceptions:
            _check_prime(p)
            _check_exponent(e)
            if p <= last:
                raise CanonicalFormError("exception primes must be strictly increasing")
            if e == self.default:
                raise CanonicalFormError(f"exception at {p} repeats the default exponent")
            last = p

    @classmethod
    def of(cls, exponents: Mapping[int, Exponent], default: Exponent = 0) -> Supernatural:
        """Build from any mapping, dropping entries equal to the default."""
        if default not in (0, INF):
            raise DomainError("default exponent must be 0 or INF")
        items = []
        for p, e in sorted(exponents.items()):
            _check_prime(p)
            e = _check_exponent(e)
            if e != default:
                items.append((p, e))
        return cls(default, tuple(items))

    def exponent(self, p: int) -> Exponent:
        for q, e in self.exceptions:
            if q == p:
                return e
        return self.default

    # partial order; Python only needs __le__/__lt__ plus their mirrors
    def __le__(self, other: Supernatural) -> bool:
        return leq(self, other)

    def __lt__(self, other: Supernatural) -> bool:
        return self != other and leq(self, other)

    def __ge__(self, other: Supernatural) -> bool:
        return leq(other, self)

    def __gt__(self, other: Supernatural) -> bool:
        return self != other and leq(other, self)

    @property
    def is_finite(self) -> bool:
        return is_finite(self)

    def to_int(self) -> int:
        """The natural number ``n`` with ``self == ν_n``."""
        if not self.is_finite:
            raise DomainError(f"{self} is not finite")
        return math.prod(p**e for p, e in self.exceptions)

    def __str__(self) -> str:
        return format_supernatural(self)


ONE = Supernatural()  # ν_1, the bottom element
TOP = Supernatural(INF)  # constantly ∞


def _fmt_factor(p: int, e: Exponent) -> str:
    if e == INF:
        return f"{p}^∞"
    return str(p) if e == 1 else f"{p}^{e}"


def format_supernatural(a: Supernatural) -> str:
    """Human-readable form: ``"1"``, ``"2^2·3"``, ``"2^∞"``, ``"∞ except 2^0·3"``."""
    body = "·".join(_fmt_factor(p, e) for p, e in a.exceptions)
    if a.default == 0:
        return body or "1"
    return f"∞ except {body}" if body else "∞"


def from_natural(n: int) -> Supernatural:
    """``ν_n``, read off the prime factorization of ``n``."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"expected a positive integer, got {n!r}")
    return Supernatural(0, tuple(sorted(factorint(n).items())))


def exponent(a: Supernatural, p: int) -> Exponent:
    return a.exponent(_check_prime(p))


@lru_cache(maxsize=1 << 16)
def leq(a: Supernatural, b: Supernatural) -> bool:
    if a.default > b.default:
        return False
    keys = {p for p, _ in a.exceptions} | {p for p, _ in b.exceptions}
    return all(a.exponent(p) <= b.exponent(p) for p in keys)


def _combine(values: list[Supernatural], pick: Callable, default: Exponent) -> Supernatural:
    dflt = pick(v.default for v in values) if values else default
    keys = set()
    for v in values:
        keys.update(p for p, _ in v.exceptions)
    return Supernatural.of({p: pick(v.exponent(p) for v in values) for p in keys}, dflt)


def join(values: Iterable[Supernatural]) -> Supernatural:
    """Pointwise max; the empty join is ``ν_1``."""
    return _combine(list(values), max, 0)


def meet(values: Iterable[Supernatural]) -> Supernatural:
    """Pointwise min of a non-empty family."""
    values = list(values)
    if not values:
        raise DomainError("meet of an empty family is the top element; pass TOP explicitly")
    return _combine(values, min, INF)


def is_finite(a: Supernatural) -> bool:
    return a.default == 0 and all(e != INF for _, e in a.exceptions)


def is_prime_power_atom(a: Supernatural) -> bool:
    """True iff ``a == ν_{p^k}`` for a prime ``p`` and ``k >= 1``."""
    return a.default == 0 and len(a.exceptions) == 1 and a.exceptions[0][1] != INF


def irreducible_decomposition(a: Supernatural) -> list[tuple[int, Exponent]]:
    """``(p, a(p))`` for every prime listed in the canonical form with a(p) > 0.

    For a default-∞ value the primes outside the list also carry ∞; they are
    not enumerated (there are infinitely many), so the decomposition is only
    a full description when ``a.default == 0``.
    """
    return [(p, e) for p, e in a.exceptions if e != 0]


def prime_power_atoms_below(a: Supernatural, max_exponent: int, primes: Iterable[int]) -> list[Supernatural]:
    """All ``ν_{p^k} <= a`` with ``p`` in ``primes`` and ``1 <= k <= max_exponent``."""
    out = []
    for p in primes:
        for k in range(1, max_exponent + 1):
            atom = Supernatural(0, ((p, k),))
            if leq(atom, a):
                out.append(atom)
    return out


def divisor_values(a: Supernatural) -> list[Supernatural]:
    """All ``ν_d`` with ``ν_d <= a``, for finite ``a``, in increasing order of ``d``."""
    return [from_natural(d) for d in divisors(a.to_int())]


# -- JSON -------------------------------------------------------------------


def _exp_to_json(e: Exponent):
    return "inf" if e == INF else e


def _exp_from_json(e) -> Exponent:
    if e == "inf":
        return INF
    if isinstance(e, bool) or not isinstance(e, int) or e < 0:
        raise CanonicalFormError(f"bad exponent {e!r}")
    return e


def to_json(a: Supernatural) -> dict:
    return {
        "default": _exp_to_json(a.default),
        "exceptions": {str(p): _exp_to_json(e) for p, e in a.exceptions},
    }


def from_json(obj) -> Supernatural:
    """Parse the canonical JSON encoding.  Bare positive integers are accepted as ``ν_n``."""
    if isinstance(obj, int) and not isinstance(obj, bool):
        return from_natural(obj)
    if not isinstance(obj, dict) or set(obj) - {"default", "exceptions"}:
        raise CanonicalFormError(f"not a supernatural number: {obj!r}")
    default = _exp_from_json(obj.get("default", 0))
    raw = obj.get("exceptions", {})
    if not isinstance(raw, dict):
        raise CanonicalFormError("exceptions must be an object")
    items = []
    for key, e in raw.items():
        if not key.isdigit() or str(int(key)) != key:
            raise CanonicalFormError(f"prime keys must be decimal strings, got {key!r}")
        items.append((int(key), _exp_from_json(e)))
    items.sort()
    return Supernatural(default, tuple(items))


# -- the six families of open sets ------------------------------------------

FAMILIES = ("T1", "T2", "T3", "T4", "T5", "T6")


@dataclass(frozen=True)
class TopologyFamily:
    """One generating set: T1/T2 take ``(p, k)``, T3..T6 take ``n``."""

    family: str
    p: int | None = None
    k: int | None = None
    n: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        if self.family in ("T1", "T2"):
            if self.p is None or self.k is None or self.n is not None:
                raise DomainError(f"{self.family} takes parameters p and k")
            _check_prime(self.p)
            if self.k < 0:
                raise DomainError("k must be a natural number")
        else:
            if self.n is None or self.p is not None or self.k is not None:
                raise DomainError(f"{self.family} takes parameter n")
            if self.n < 1:
                raise DomainError("n must be positive")


def topology_member(f: TopologyFamily, a: Supernatural) -> bool:
    if f.family == "T1":
        return a.exponent(f.p) > f.k
    if f.family == "T2":
        return a.exponent(f.p) >= f.k
    vn = from_natural(f.n)
    if f.family == "T3":
        return leq(vn, a)
    if f.family == "T4":
        return a != vn and leq(vn, a)
    if f.family == "T5":
        return not leq(a, vn)
    return not (a != vn and leq(a, vn))  # T6


def standard_universe() -> list[Supernatural]:
    """Test universe for the topology identities.

    Divisors of 2^4·3^3·5^2·7; the same with any one exponent raised to ∞;
    the default-∞ values whose exceptions are a divisor's exponents; and ∞.
    """
    primes = (2, 3, 5, 7)
    ranges = [range(5), range(4), range(3), range(2)]
    seen: dict[Supernatural, None] = {}
    for exps in product(*ranges):
        base = dict(zip(primes, exps))
        seen.setdefault(Supernatural.of(base), None)
        for p in primes:
            seen.setdefault(Supernatural.of({**base, p: INF}), None)
        seen.setdefault(Supernatural.of(base, INF), None)
    seen.setdefault(TOP, None)
    return list(seen)


def _relevant_primes(a: Supernatural, n: int) -> list[int]:
    # Every prime outside this list behaves like the fresh one appended at the end.
    ps = sorted({p for p, _ in a.exceptions} | set(factorint(n)))
    return ps + [nextprime(max(ps, default=1))]


@dataclass(frozen=True)
class IdentityCheck:
    identity_id: str
    passed: bool
    checked: int
    witness: dict | None = None


def _member(fam: str, **params) -> Callable[[Supernatural], bool]:
    f = TopologyFamily(fam, **params)
    return lambda a: topology_member(f, a)


def _compare(identity_id, universe, lhs, rhs) -> IdentityCheck:
    for a in universe:
        left, right = lhs(a), rhs(a)
        if left != right:
            return IdentityCheck(identity_id, False, len(universe),
                                 {"element": to_json(a), "lhs": left, "rhs": right})
    return IdentityCheck(identity_id, True, len(universe))


def _t2_shift(iid, universe, p=2, k=1, **_):
    if k < 1:
        raise DomainError("k must be >= 1 for this identity")
    return _compare(iid, universe, _member("T2", p=p, k=k), _member("T1", p=p, k=k - 1))


def _t2_k0(iid, universe, p=2, **_):
    return _compare(iid, universe, _member("T2", p=p, k=0), lambda a: True)


def _t3_meet(iid, universe, n=12, **_):
    parts = [_member("T2", p=p, k=k) for p, k in factorint(n).items()]
    return _compare(iid, universe, _member("T3", n=n), lambda a: all(m(a) for m in parts))


def _t1_pk(iid, universe, p=2, k=1, **_):
    return _compare(iid, universe, _member("T1", p=p, k=k), _member("T3", n=p ** (k + 1)))


def _t4_union(iid, universe, n=2, m_bound=200, **_):
    vn = from_natural(n)
    bounded = [m for m in range(1, m_bound + 1) if vn < from_natural(m)]

    def rhs(a):
        ms = bounded + [n * p for p in _relevant_primes(a, n)]
        return any(leq(from_natural(m), a) for m in ms)

    return _compare(iid, universe, _member("T4", n=n), rhs)


def _t5_union(iid, universe, n=6, **_):
    vn = from_natural(n)
    return _compare(iid, universe, _member("T5", n=n),
                    lambda a: any(a.exponent(p) > vn.exponent(p) for p in _relevant_primes(a, n)))


def _t6_meet(iid, universe, n=12, **_):
    below = [d for d in divisors(n) if d != n]
    return _compare(iid, universe, _member("T6", n=n),
                    lambda a: all(_member("T5", n=m)(a) for m in below))


def _t5_t6_union(iid, universe, n=6, **_):
    return _compare(iid, universe, _member("T5", n=n),
                    lambda a: any(_member("T6", n=n * p)(a) for p in _relevant_primes(a, n)))


def _t4_not_cover(iid, universe, n_bound=200, **_):
    bad = [n for n in range(1, n_bound + 1) if _member("T4", n=n)(ONE)]
    return IdentityCheck(iid, not bad, n_bound, {"n": bad[0]} if bad else None)


def _t5_cofinite(iid, universe, n=12, **_):
    # within the universe, the complement of T5(n) is exactly the divisors of n present
    outside = {a for a in universe if not _member("T5", n=n)(a)}
    expected = {a for a in universe if a.is_finite and n % a.to_int() == 0}
    ok = outside == expected
    witness = None if ok else {"unexpected": [to_json(a) for a in sorted(outside ^ expected, key=str)][:5]}
    return IdentityCheck(iid, ok, len(universe), witness)


def _t4_not_cofinite(iid, universe, n=2, prime_bound=50, **_):
    inside = _member("T4", n=n)
    primes = [m for m in range(2, prime_bound + 1) if isprime(m) and m != n]
    outside = [m for m in primes if not inside(from_natural(m))]
    ok = inside(from_natural(2 * n)) and outside == primes
    witness = None if ok else {"primes_inside": sorted(set(primes) - set(outside))}
    return IdentityCheck(iid, ok, len(primes) + 1, witness)


def _basic_t4_neighbourhoods(point: Supernatural, n_bound: int) -> list[int]:
    return [n for n in range(1, n_bound + 1) if _member("T4", n=n)(point)]


def _t5_not_in_t4(iid, universe, n_bound=200, **_):
    # ν_3 is in T5(2) = N \ {ν_1, ν_2}; every basic T4 set around ν_3 is T4(1), which contains ν_2.
    v2, v3 = from_natural(2), from_natural(3)
    around = _basic_t4_neighbourhoods(v3, n_bound)
    ok = (_member("T5", n=2)(v3) and around == [1]
          and _member("T4", n=1)(v2) and not _member("T5", n=2)(v2))
    return IdentityCheck(iid, ok, n_bound, None if ok else {"neighbourhoods": around})


def _t1_not_in_t4(iid, universe, n_bound=200, **_):
    # A = {ν(2) > 0} contains ν_2; every basic T4 set around ν_2 is T4(1), which contains ν_3 ∉ A.
    v2, v3 = from_natural(2), from_natural(3)
    in_a = _member("T1", p=2, k=0)
    around = _basic_t4_neighbourhoods(v2, n_bound)
    ok = in_a(v2) and around == [1] and _member("T4", n=1)(v3) and not in_a(v3)
    return IdentityCheck(iid, ok, n_bound, None if ok else {"neighbourhoods": around})


IDENTITY_CATALOG: dict[str, tuple[str, Callable]] = {
    "t2_eq_t1_shift": ("{ν(p) >= k} = {ν(p) > k-1} for k >= 1", _t2_shift),
    "t2_t1_k0": ("{ν(p) >= 0} is everything", _t2_k0),
    "t3_eq_t2_meet": ("{ν >= ν_n} = ⋂ {ν(p_i) >= k_i} over n = ∏ p_i^k_i", _t3_meet),
    "t1_eq_t3_pk": ("{ν(p) > k} = {ν >= ν_{p^(k+1)}}", _t1_pk),
    "t4_eq_t3_union": ("{ν > ν_n} = ⋃ {ν >= ν_m} over ν_m > ν_n", _t4_union),
    "t5_eq_t1_union": ("{ν ≰ ν_n} = ⋃_p {ν(p) > ν_n(p)}", _t5_union),
    "t6_eq_t5_meet": ("{ν ≮ ν_n} = ⋂ {ν ≰ ν_m} over ν_m < ν_n", _t6_meet),
    "t5_eq_t6_union": ("{ν ≰ ν_n} = ⋃_p {ν ≮ ν_np}", _t5_t6_union),
    "t4_not_cover": ("ν_1 lies in no set {ν > ν_n}", _t4_not_cover),
    "t5_cofinite": ("the complement of {ν ≰ ν_n} is the finite set of divisors of n", _t5_cofinite),
    "t4_not_cofinite": ("{ν > ν_2} contains ν_4 but misses ν_m for every other prime m", _t4_not_cofinite),
    "t5_not_in_t4": ("N minus {ν_1, ν_2} is not a union of finite meets of {ν > ν_n}", _t5_not_in_t4),
    "t1_not_in_t4": ("{ν(2) > 0} is not a union of finite meets of {ν > ν_n}", _t1_not_in_t4),
}


def check_topology_identity(identity_id: str, universe: list[Supernatural] | None = None,
                            **params) -> IdentityCheck:
    """Evaluate a catalog identity pointwise on ``universe`` (default: :func:`standard_universe`).

    Unions over all primes are evaluated exactly: the primes named by the
    element and by ``n`` are tried individually and one fresh prime stands in
    for all the others.
    """
    try:
        _, fn = IDENTITY_CATALOG[identity_id]
    except KeyError:
        raise UnknownIdentifier(f"unknown identity {identity_id!r}") from None
    if universe is None:
        universe = standard_universe()
    return fn(identity_id, universe, **params)
