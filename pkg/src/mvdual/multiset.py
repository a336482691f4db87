"""Finite multisets and their arrows.

A finite multiset is a finite discrete space whose points carry supernatural
denominators.  An arrow is any point map that does not increase
denominators: ``ζ_Y(f(x)) <= ζ_X(x)``.  Continuity is vacuous for finite
discrete spaces, so hom-sets are finite and can be listed.

Points are strings.  The order of ``FiniteMultiset.points`` is the fixed
total order used by every enumeration in the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Iterable, Mapping, Sequence

from sympy import factorint

from . import supernat as sn
from .errors import BoundaryMismatch, DenominatorViolation, DomainError, PreconditionError
from .supernat import ONE, Supernatural, leq


@dataclass(frozen=True)
class FiniteMultiset:
    points: tuple[str, ...]
    denoms: tuple[Supernatural, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.points) != len(self.denoms):
            raise DomainError("every point needs exactly one denominator")
        for x in self.points:
            if not isinstance(x, str) or not x:
                raise DomainError(f"point identifiers must be non-empty strings, got {x!r}")
        for d in self.denoms:
            if not isinstance(d, Supernatural):
                raise DomainError(f"denominator {d!r} is not a supernatural number")
        index = {x: i for i, x in enumerate(self.points)}
        if len(index) != len(self.points):
            raise DomainError("point identifiers must be distinct")
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, x) -> bool:
        return x in self._index

    def index(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise DomainError(f"{x!r} is not a point") from None

    def zeta(self, x: str) -> Supernatural:
        return self.denoms[self.index(x)]

    @property
    def denom(self) -> dict[str, Supernatural]:
        return dict(zip(self.points, self.denoms))

    def restrict(self, subset: Iterable[str]) -> FiniteMultiset:
        keep = set(subset)
        pts = [x for x in self.points if x in keep]
        return FiniteMultiset(tuple(pts), tuple(self.zeta(x) for x in pts))

    def __str__(self) -> str:
        inner = ", ".join(f"{x}:{d}" for x, d in zip(self.points, self.denoms))
        return "{" + inner + "}"


def multiset(entries: Mapping[str, Supernatural | int] | Sequence[Supernatural | int]) -> FiniteMultiset:
    """Convenience constructor.

    A mapping gives ``point -> denominator``; a sequence names its points
    ``"0", "1", ...``.  Integers stand for ``ν_n``.
    """
    if isinstance(entries, Mapping):
        items = list(entries.items())
    else:
        items = [(str(i), d) for i, d in enumerate(entries)]
    pts = tuple(x for x, _ in items)
    ds = tuple(sn.from_natural(d) if isinstance(d, int) else d for _, d in items)
    return FiniteMultiset(pts, ds)


EMPTY = FiniteMultiset((), ())


def mk_point(d: Supernatural | int = ONE, name: str = "0") -> FiniteMultiset:
    return multiset({name: d})


def mk_two() -> FiniteMultiset:
    """The two-point multiset with both denominators ν_1."""
    return multiset([1, 1])


def mk_dn(n: int) -> FiniteMultiset:
    """Points ``0`` and ``1`` with denominators ν_1 and ν_n."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"D_n needs n >= 1, got {n!r}")
    return multiset([1, n])


@dataclass(frozen=True)
class MultisetArrow:
    """A point map ``dom -> cod``; ``images[i]`` indexes ``cod.points``.

    Instances built directly are not checked for the denominator condition;
    use :func:`check_arrow` (or :meth:`is_valid`) for that.
    """

    dom: FiniteMultiset
    cod: FiniteMultiset
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != len(self.dom):
            raise DomainError("map must be total on the domain")
        n = len(self.cod)
        if any(not 0 <= j < n for j in self.images):
            raise DomainError("map values must be codomain points")

    def __call__(self, x: str) -> str:
        return self.cod.points[self.images[self.dom.index(x)]]

    @property
    def mapping(self) -> dict[str, str]:
        return {x: self.cod.points[j] for x, j in zip(self.dom.points, self.images)}

    def violations(self) -> list[str]:
        return [x for x, d, j in zip(self.dom.points, self.dom.denoms, self.images)
                if not leq(self.cod.denoms[j], d)]

    def is_valid(self) -> bool:
        return not self.violations()

    def __str__(self) -> str:
        return ", ".join(f"{x}->{y}" for x, y in self.mapping.items())


def from_mapping(dom: FiniteMultiset, cod: FiniteMultiset, mapping: Mapping[str, str]) -> MultisetArrow:
    """Build an unchecked arrow from a ``point -> point`` mapping."""
    if set(mapping) != set(dom.points):
        raise DomainError("map must be defined exactly on the domain points")
    return MultisetArrow(dom, cod, tuple(cod.index(mapping[x]) for x in dom.points))


def check_arrow(dom: FiniteMultiset, cod: FiniteMultiset,
                mapping: Mapping[str, str] | Sequence[int]) -> MultisetArrow:
    """Validated arrow; raises :class:`DenominatorViolation` naming the first bad point."""
    if isinstance(mapping, Mapping):
        f = from_mapping(dom, cod, mapping)
    else:
        f = MultisetArrow(dom, cod, tuple(mapping))
    bad = f.violations()
    if bad:
        raise DenominatorViolation(bad[0])
    return f


def identity(X: FiniteMultiset) -> MultisetArrow:
    return MultisetArrow(X, X, tuple(range(len(X))))


def compose(g: MultisetArrow, f: MultisetArrow) -> MultisetArrow:
    """``g ∘ f``."""
    if f.cod != g.dom:
        raise BoundaryMismatch("cod(f) must equal dom(g)")
    return MultisetArrow(f.dom, g.cod, tuple(g.images[j] for j in f.images))


def constant(X: FiniteMultiset, Y: FiniteMultiset, y: str) -> MultisetArrow:
    return MultisetArrow(X, Y, (Y.index(y),) * len(X))


@lru_cache(maxsize=1 << 15)
def enumerate_homs(X: FiniteMultiset, Y: FiniteMultiset) -> tuple[MultisetArrow, ...]:
    """Every arrow ``X -> Y``, lexicographic in the images (codomain point order)."""
    choices = [[j for j, e in enumerate(Y.denoms) if leq(e, d)] for d in X.denoms]
    return tuple(MultisetArrow(X, Y, imgs) for imgs in product(*choices))


# -- classification -----------------------------------------------------------


@dataclass(frozen=True)
class ArrowFlags:
    monic: bool
    epic: bool
    regular_monic: bool
    regular_epic: bool
    iso: bool

    def as_dict(self) -> dict[str, bool]:
        return {k: getattr(self, k) for k in ("monic", "epic", "regular_monic", "regular_epic", "iso")}

    def labels(self) -> list[str]:
        return [k for k, v in self.as_dict().items() if v]


def preserves_denominators(f: MultisetArrow) -> bool:
    return all(f.cod.denoms[j] == d for d, j in zip(f.dom.denoms, f.images))


def fibers(f: MultisetArrow) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in f.cod.points]
    for i, j in enumerate(f.images):
        out[j].append(i)
    return out


def classify(f: MultisetArrow) -> ArrowFlags:
    injective = len(set(f.images)) == len(f.images)
    surjective = len(set(f.images)) == len(f.cod)
    keeps = preserves_denominators(f)
    fiber_meets = surjective and all(
        f.cod.denoms[j] == sn.meet(f.dom.denoms[i] for i in fib)
        for j, fib in enumerate(fibers(f))
    )
    return ArrowFlags(
        monic=injective,
        epic=surjective,
        regular_monic=injective and keeps,
        regular_epic=fiber_meets,
        iso=injective and surjective and keeps,
    )


def factor_through_epi(e: MultisetArrow, g: MultisetArrow) -> MultisetArrow | None:
    """The arrow ``h`` with ``h ∘ e == g`` if there is one.

    ``e`` must be surjective, so ``h`` is forced on every point and the only
    question is whether the forced map is well defined and an arrow.
    """
    if e.dom != g.dom:
        raise BoundaryMismatch("e and g must share a domain")
    forced: dict[int, int] = {}
    for j, k in zip(e.images, g.images):
        if forced.setdefault(j, k) != k:
            return None
    if len(forced) != len(e.cod):
        raise DomainError("factor_through_epi needs a surjective first arrow")
    h = MultisetArrow(e.cod, g.cod, tuple(forced[j] for j in range(len(e.cod))))
    return h if h.is_valid() else None


def factor_through_mono(m: MultisetArrow, g: MultisetArrow) -> MultisetArrow | None:
    """The arrow ``h`` with ``m ∘ h == g`` if there is one (``m`` injective)."""
    if m.cod != g.cod:
        raise BoundaryMismatch("m and g must share a codomain")
    back = {j: i for i, j in enumerate(m.images)}
    if len(back) != len(m.images):
        raise DomainError("factor_through_mono needs an injective first arrow")
    try:
        h = MultisetArrow(g.dom, m.dom, tuple(back[j] for j in g.images))
    except KeyError:
        return None
    return h if h.is_valid() else None


# -- co-generation ------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: dict | None = None
    bound: int | None = None


def _nu1_points(G: FiniteMultiset) -> list[str]:
    return [x for x, d in zip(G.points, G.denoms) if d == ONE]


def is_cogenerating(family: Sequence[FiniteMultiset]) -> Verdict:
    """Holds iff some member has two distinct points of denominator ν_1."""
    for i, G in enumerate(family):
        ones = _nu1_points(G)
        if len(ones) >= 2:
            return Verdict(True, {"member": i, "points": ones[:2]})
    return Verdict(False)


def _prime_powers_upto(bound: int) -> list[int]:
    return [q for q in range(2, bound + 1) if len(factorint(q)) == 1]


def is_regularly_cogenerating_up_to(family: Sequence[FiniteMultiset], bound: int) -> Verdict:
    """Check the regular co-generation condition for n in {1} ∪ {p^k <= bound}.

    For each such n some member needs a point of denominator ν_n and a
    distinct point of denominator ν_1.  The real condition ranges over all
    prime powers; the verdict only speaks up to ``bound``.
    """
    if bound < 1:
        raise DomainError("bound must be >= 1")
    if not is_cogenerating(family).holds:
        return Verdict(False, {"n": 1}, bound)
    for q in _prime_powers_upto(bound):
        vq = sn.from_natural(q)
        if not any(vq in G.denoms and ONE in G.denoms for G in family):
            return Verdict(False, {"n": q}, bound)
    return Verdict(True, None, bound)


def connect_arrow(X: FiniteMultiset, x: str, Y: FiniteMultiset, y: str) -> MultisetArrow:
    """An arrow with ``f(x) == y``: points with denominator >= ζ_Y(y) go to y,
    everything else to the first ν_1 point of Y."""
    target = Y.zeta(y)
    problems = []
    if not leq(target, X.zeta(x)):
        problems.append(f"ζ_Y({y}) = {target} is not <= ζ_X({x}) = {X.zeta(x)}")
    if not target.is_finite:
        problems.append(f"ζ_Y({y}) = {target} is not finite")
    ones = _nu1_points(Y)
    if not ones:
        problems.append("Y has no point of denominator ν_1")
    if problems:
        raise PreconditionError(problems)
    jy, j1 = Y.index(y), Y.index(ones[0])
    f = MultisetArrow(X, Y, tuple(jy if leq(target, d) else j1 for d in X.denoms))
    assert f.is_valid() and f(x) == y
    return f


def is_finitely_copresentable(X: FiniteMultiset) -> bool:
    return all(d.is_finite for d in X.denoms)


# -- instance generation --------------------------------------------------------


def generate_multisets(max_points: int, denominators: Sequence[Supernatural | int],
                       include_empty: bool = False, min_points: int = 1) -> list[FiniteMultiset]:
    """All multisets with ``min_points..max_points`` points up to renaming.

    Points are named ``"0", "1", ...`` and carry denominators in
    non-decreasing position of ``denominators`` (duplicates in the input are
    dropped).  Output is ordered by size, then lexicographically.
    """
    ds = list(dict.fromkeys(sn.from_natural(d) if isinstance(d, int) else d for d in denominators))
    out = [EMPTY] if include_empty else []
    for k in range(max(min_points, 1), max_points + 1):
        for combo in combinations_with_replacement(ds, k):
            out.append(FiniteMultiset(tuple(str(i) for i in range(k)), combo))
    return out


def divisor_closure(objects: Iterable[FiniteMultiset]) -> list[Supernatural]:
    """Every ν_d dividing some (finite) denominator of the given multisets."""
    nums = set()
    for X in objects:
        for d in X.denoms:
            if not d.is_finite:
                raise DomainError("divisor closure needs finite denominators")
            nums.update(sn.divisors(d.to_int()))
    return [sn.from_natural(n) for n in sorted(nums or {1})]


# -- JSON -------------------------------------------------------------------------


def to_json(X: FiniteMultiset) -> dict:
    return {"points": [{"id": x, "denominator": sn.to_json(d)} for x, d in zip(X.points, X.denoms)]}


def from_json(obj) -> FiniteMultiset:
    if not isinstance(obj, dict) or "points" not in obj:
        raise DomainError("a multiset is an object with a 'points' list")
    pts, ds = [], []
    for entry in obj["points"]:
        if not isinstance(entry, dict) or "id" not in entry:
            raise DomainError(f"bad point entry {entry!r}")
        pts.append(entry["id"])
        ds.append(sn.from_json(entry.get("denominator", 1)))
    return FiniteMultiset(tuple(pts), tuple(ds))


def resolve_object(ref) -> FiniteMultiset:
    """An inline multiset, or a builtin name: ``"two"``, ``"D6"``, ``"point"``, ``"empty"``.

    Besides the full ``{"points": [...]}`` form, a dict ``{"a": 12, "b": 4}``
    mapping point ids to denominators is accepted.
    """
    if isinstance(ref, dict):
        if "points" in ref:
            return from_json(ref)
        return FiniteMultiset(tuple(ref), tuple(sn.from_json(d) for d in ref.values()))
    if ref == "two":
        return mk_two()
    if ref == "point":
        return mk_point()
    if ref == "empty":
        return EMPTY
    if isinstance(ref, str) and ref[:1] == "D" and ref[1:].isdigit():
        return mk_dn(int(ref[1:]))
    raise DomainError(f"cannot resolve object reference {ref!r}")


def arrow_to_json(f: MultisetArrow) -> dict:
    return {"dom": to_json(f.dom), "cod": to_json(f.cod), "map": f.mapping}


def arrow_from_json(obj, resolve=resolve_object, validate: bool = True) -> MultisetArrow:
    if not isinstance(obj, dict) or not {"dom", "cod", "map"} <= set(obj):
        raise DomainError("an arrow is an object with 'dom', 'cod' and 'map'")
    dom, cod = resolve(obj["dom"]), resolve(obj["cod"])
    if validate:
        return check_arrow(dom, cod, obj["map"])
    return from_mapping(dom, cod, obj["map"])
