"""A catalog of named finite-instance checks.

Each check enumerates a family of small instances, compares a construction
or predicate against an independent search, and reports the first failure
in enumeration order.  Reports are deterministic: same bounds, same bytes.

Growth notes next to each check say which bound drives the cost.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Callable

from sympy import factorint

from . import supernat as sn
from .corel import (
    check_quot_cs_iso,
    effectivize,
    enumerate_corelations,
    is_reflexive,
    is_symmetric,
    is_transitive,
    order_without_mu,
    reflexive_by_relation,
    reflexive_by_search,
)
from .duality import check_hom_bijection, check_identity, dual_arrow
from .errors import DomainError, InternalError, PreconditionError, UnknownIdentifier
from .mscat import (
    Construction,
    Diagram,
    canonical_arrow_to_family,
    canonical_profile,
    coequalizer,
    coproduct,
    dependency_coordinates,
    equalizer,
    extend_along_regular_mono,
    factors_through_coordinates,
    kernel_pair,
    cokernel_pair,
    partition_assign,
    product as ms_product,
    standard_probes,
    universal_property_check,
)
from .multiset import (
    FiniteMultiset,
    MultisetArrow,
    classify,
    compose,
    connect_arrow,
    enumerate_homs,
    factor_through_epi,
    generate_multisets,
    is_cogenerating,
    is_regularly_cogenerating_up_to,
    mk_dn,
    mk_two,
)
from .mv import (
    chain,
    chain_product,
    check_mv_axioms,
    check_tables,
    compose_homs,
    enumerate_homs_bruteforce,
    enumerate_homs_naive,
    hom_exists_chain,
    mutate_entry,
    mutate_mod_one,
)
from .supernat import ONE, leq


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    verdict: str  # "pass" or "fail"
    instances_tested: int
    bounds: dict
    witness: dict | None = None
    statement: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> str:
        return json.dumps({
            "check_id": self.check_id,
            "verdict": self.verdict,
            "instances_tested": self.instances_tested,
            "witness": self.witness,
            "bounds": self.bounds,
            "statement": self.statement,
        }, sort_keys=True, ensure_ascii=False)


class _Failed(Exception):
    def __init__(self, witness: dict):
        self.witness = witness


class _Counter:
    def __init__(self):
        self.n = 0

    def tick(self, k: int = 1):
        self.n += k


def _ms(X: FiniteMultiset) -> dict:
    return {x: str(d) for x, d in zip(X.points, X.denoms)}


def _arrow(f: MultisetArrow) -> dict:
    return {"dom": _ms(f.dom), "cod": _ms(f.cod), "map": f.mapping}


def _expect(cond: bool, **witness):
    if not cond:
        raise _Failed(witness)


def _objects(points: int, divisors_of: int, empty: bool = True) -> list[FiniteMultiset]:
    return generate_multisets(points, sn.divisors(divisors_of), include_empty=empty)


# -- MV side -----------------------------------------------------------------------


def _chain_hom(c: _Counter, max_n=12, naive_budget=10**5):
    # (max_n)^2 chain pairs; naive search where (n+1)^(m+1) <= naive_budget
    for m, n in product(range(1, max_n + 1), repeat=2):
        c.tick()
        homs = enumerate_homs_bruteforce(chain(m), chain(n))
        expected = 1 if hom_exists_chain(m, n) else 0
        _expect(len(homs) == expected, m=m, n=n, homs=len(homs), expected=expected)
        if (n + 1) ** (m + 1) <= naive_budget:
            naive = enumerate_homs_naive(chain(m), chain(n))
            _expect(len(naive) == expected, m=m, n=n, naive_homs=len(naive), expected=expected)


def _mv_axioms(c: _Counter, max_chain=12, max_factors=3, max_factor_n=6, mutation_seed=0):
    # products of up to max_factors chains: algebra size <= (max_factor_n+1)^max_factors, cubic cost
    algebras = [chain(n) for n in range(1, max_chain + 1)]
    for k in range(2, max_factors + 1):
        algebras += [chain_product(ns) for ns in combinations_with_replacement(range(1, max_factor_n + 1), k)]
    for A in algebras:
        c.tick()
        r = check_mv_axioms(A)
        _expect(r.passed, algebra=str(A), failures=r.failures(),
                witness={k: r.results[k][1] for k in r.failures()})
    mod = check_tables(mutate_mod_one(chain(2)))
    c.tick()
    _expect(not mod.results["characteristic"][0], mutation="addition mod 1 on S_2", failures=mod.failures())
    tables, (x, y) = mutate_entry(chain_product([2, 3]), mutation_seed)
    rep = check_tables(tables)
    c.tick()
    _expect(not rep.passed, mutation=f"entry ({x}, {y}) of ⊕ on S_2 × S_3")


# -- supernatural numbers --------------------------------------------------------------


def _supremum(c: _Counter, max_exponent=6, divisibility_bound=200):
    # universe size x primes x exponents; divisibility is quadratic in its bound
    universe = sn.standard_universe()
    for a in universe:
        c.tick()
        primes = sorted({2, 3, 5, 7, 11} | {p for p, _ in a.exceptions})
        s = sn.join(sn.prime_power_atoms_below(a, max_exponent, primes))
        for p in primes:
            _expect(sn.exponent(s, p) == min(sn.exponent(a, p), max_exponent),
                    element=str(a), prime=p, join=str(s))
        # a finite value is recovered exactly once the truncation no longer bites
        if a.is_finite and all(e <= max_exponent for _, e in a.exceptions):
            _expect(s == a, element=str(a), join=str(s))
    for m, n in product(range(1, divisibility_bound + 1), repeat=2):
        c.tick()
        vm, vn = sn.from_natural(m), sn.from_natural(n)
        _expect(leq(vm, vn) == (n % m == 0), m=m, n=n)
        _expect(sn.join([vm, vn]) == sn.from_natural(math.lcm(m, n)), m=m, n=n, op="join")
        _expect(sn.meet([vm, vn]) == sn.from_natural(math.gcd(m, n)), m=m, n=n, op="meet")


def _join_reducible(a: int) -> bool:
    """Is ``a`` the lcm of a set of its proper divisors?  Subsets by increasing size."""
    below = [d for d in sn.divisors(a) if d != a]
    for size in range(len(below) + 1):
        for sub in combinations(below, size):
            if math.lcm(*sub) == a if sub else a == 1:
                return True
    return False


def _irreducible(c: _Counter, bound=10**4):
    # every a <= bound, inside the divisor lattice of a; subsets of proper divisors
    for a in range(1, bound + 1):
        c.tick()
        brute = not _join_reducible(a)
        _expect(brute == sn.is_prime_power_atom(sn.from_natural(a)), a=a, brute_force_irreducible=brute)


def _topology(c: _Counter):
    for iid in sn.IDENTITY_CATALOG:
        c.tick()
        r = sn.check_topology_identity(iid)
        _expect(r.passed, identity=iid, witness=r.witness)


# -- arrows -------------------------------------------------------------------------


def _left_cancellable(f: MultisetArrow, probes) -> bool:
    for P in probes:
        seen = set()
        for u in enumerate_homs(P, f.dom):
            key = compose(f, u).images
            if key in seen:
                return False
            seen.add(key)
    return True


def _right_cancellable(f: MultisetArrow, probes) -> bool:
    for P in probes:
        seen = set()
        for u in enumerate_homs(f.cod, P):
            key = compose(u, f).images
            if key in seen:
                return False
            seen.add(key)
    return True


def _is_equalizer_of_cokernel_pair(f: MultisetArrow, probes) -> bool:
    """Does ``f`` have the universal property of an equalizer of its cokernel pair?"""
    _, (q0, q1) = cokernel_pair(f)
    cone = Construction("limit", Diagram((f.cod, q0.cod), ((0, 1, q0), (0, 1, q1))), f.dom,
                        (f, compose(q0, f)), f)
    return universal_property_check(cone, probes).passed


def _is_coequalizer_of_kernel_pair(f: MultisetArrow, probes) -> bool:
    _, (p0, p1) = kernel_pair(f)
    cocone = Construction("colimit", Diagram((p0.dom, f.dom), ((0, 1, p0), (0, 1, p1))), f.cod,
                          (compose(f, p0), f), f)
    return universal_property_check(cocone, probes).passed


def _arrows(c: _Counter, max_points=3, divisors_of=12):
    # arrows between all pairs of objects: (#objects)^2 x |Hom|; probes are fixed
    objs = _objects(max_points, divisors_of)
    small = _objects(2, divisors_of)
    points = _objects(1, divisors_of)
    for X, Y in product(objs, repeat=2):
        for f in enumerate_homs(X, Y):
            c.tick()
            fl = classify(f)
            w = _arrow(f)
            _expect(fl.monic == _left_cancellable(f, small), arrow=w, flag="monic")
            _expect(fl.epic == _right_cancellable(f, small), arrow=w, flag="epic")
            # one-point probes detect points and their denominators, enough for finite limits
            _expect(fl.regular_monic == _is_equalizer_of_cokernel_pair(f, points), arrow=w, flag="regular_monic")
            _expect(fl.regular_epic == _is_coequalizer_of_kernel_pair(f, small), arrow=w, flag="regular_epic")
            _, q = coequalizer(*kernel_pair(f).out)
            eps = factor_through_epi(q, f) if fl.epic else None
            same = eps is not None and classify(eps).iso
            _expect(fl.regular_epic == same, arrow=w, flag="regular_epic vs coequalizer of kernel pair")
            iso_inverse = fl.iso and any(compose(g, f).images == tuple(range(len(X)))
                                         and compose(f, g).images == tuple(range(len(Y)))
                                         for g in enumerate_homs(Y, X))
            _expect(fl.iso == iso_inverse, arrow=w, flag="iso")


# -- limits and colimits ---------------------------------------------------------------


def _limit_formula(con: Construction) -> bool:
    for x in range(len(con.apex)):
        expect = sn.join(leg.cod.denoms[leg.images[x]] for leg in con.legs)
        if con.apex.denoms[x] != expect:
            return False
    return True


def _colimit_formula(con: Construction) -> bool:
    pre = [[] for _ in con.apex.points]
    for leg in con.legs:
        for d, x in zip(leg.dom.denoms, leg.images):
            pre[x].append(d)
    return all(p and con.apex.denoms[x] == sn.meet(p) for x, p in enumerate(pre))


def _check_construction(c: _Counter, con: Construction, formula: Callable, label: str, inputs):
    c.tick()
    _expect(formula(con), construction=label, inputs=inputs, reason="denominator formula")
    r = universal_property_check(con, standard_probes(con))
    _expect(r.passed, construction=label, inputs=inputs, witness=r.witness)


def _limits(c: _Counter, max_points=2, divisors_of=6):
    # pairs of objects, plus every parallel pair of arrows between them
    objs = _objects(max_points, divisors_of)
    _check_construction(c, ms_product([]), _limit_formula, "product", [])
    for X in objs:
        _check_construction(c, ms_product([X]), _limit_formula, "product", [_ms(X)])
    for X, Y in product(objs, repeat=2):
        _check_construction(c, ms_product([X, Y]), _limit_formula, "product", [_ms(X), _ms(Y)])
        for f, g in product(enumerate_homs(X, Y), repeat=2):
            con = equalizer(f, g)
            _check_construction(c, con, _limit_formula, "equalizer", [_arrow(f), _arrow(g)])
            _expect(classify(con.out).regular_monic, construction="equalizer", inputs=[_arrow(f), _arrow(g)],
                    reason="inclusion is not regular monic")


def _colimits(c: _Counter, max_points=2, divisors_of=6):
    objs = _objects(max_points, divisors_of)
    _check_construction(c, coproduct([]), _colimit_formula, "coproduct", [])
    for X in objs:
        _check_construction(c, coproduct([X]), _colimit_formula, "coproduct", [_ms(X)])
    for X, Y in product(objs, repeat=2):
        _check_construction(c, coproduct([X, Y]), _colimit_formula, "coproduct", [_ms(X), _ms(Y)])
        for f, g in product(enumerate_homs(X, Y), repeat=2):
            con = coequalizer(f, g)
            _check_construction(c, con, _colimit_formula, "coequalizer", [_arrow(f), _arrow(g)])
            _expect(classify(con.out).regular_epic, construction="coequalizer", inputs=[_arrow(f), _arrow(g)],
                    reason="quotient is not regular epic")


# -- co-generation -----------------------------------------------------------------------


def _separates(family, X: FiniteMultiset) -> bool:
    """Direct search: every two points of ``X`` are told apart by some arrow into the family."""
    for i, j in combinations(range(len(X)), 2):
        if not any(t.images[i] != t.images[j] for G in family for t in enumerate_homs(X, G)):
            return False
    return True


def _cogen(c: _Counter, family_points=2, family_divisors_of=6, max_family=2, test_points=3, test_divisors_of=6):
    # families: subsets of size <= max_family of small objects; tested on all test objects
    pool = _objects(family_points, family_divisors_of, empty=False)
    tests = _objects(test_points, test_divisors_of)
    families = [list(F) for k in range(max_family + 1) for F in combinations(pool, k)]
    for F in families:
        c.tick()
        predicted = is_cogenerating(F).holds
        direct = all(_separates(F, X) for X in tests)
        _expect(predicted == direct, family=[_ms(G) for G in F], predicted=predicted, direct=direct)
        for X in tests:
            _expect(canonical_profile(X, F).injective == _separates(F, X),
                    family=[_ms(G) for G in F], X=_ms(X), reason="canonical arrow injectivity")


def _covered(family, q: int) -> bool:
    vq = sn.from_natural(q)
    return any(vq in G.denoms and ONE in G.denoms for G in family)


def _predict_preserving(X: FiniteMultiset, family) -> list[str]:
    """Points whose denominator needs a prime power the family does not supply."""
    out = []
    for x, d in zip(X.points, X.denoms):
        if any(not _covered(family, p ** e) for p, e in factorint(d.to_int()).items()):
            out.append(x)
    return out


def _regcogen(c: _Counter, bound=12, test_points=2, budget=10**4):
    # family variants x test objects over 1..bound; materialized only within budget
    if test_points < 2:
        raise DomainError("L-REGCOGEN needs test_points >= 2: one-point objects cannot expose a failure to separate")
    prime_powers = [q for q in range(2, bound + 1) if len(factorint(q)) == 1]
    full = [mk_two()] + [mk_dn(q) for q in prime_powers]
    variants = [("full", full)] + [(f"without D_{q}", [G for G in full if G != mk_dn(q)]) for q in prime_powers]
    variants += [("without 2", full[1:]), ("only 2", [mk_two()])]
    tests = generate_multisets(test_points, range(1, bound + 1), include_empty=True)
    for name, F in variants:
        every_regular = True
        for X in tests:
            c.tick()
            prof = canonical_profile(X, F)
            expected_bad = _predict_preserving(X, F)
            _expect(prof.not_preserved == expected_bad, family=name, X=_ms(X),
                    not_preserved=prof.not_preserved, predicted=expected_bad)
            if prof.product_size <= budget:
                arrow = canonical_arrow_to_family(X, F, budget)
                _expect(arrow.flags.monic == prof.injective
                        and arrow.flags.regular_monic == (prof.injective and prof.preserves_denominators),
                        family=name, X=_ms(X), reason="materialized arrow disagrees with profile")
            every_regular &= prof.injective and prof.preserves_denominators
        verdict = is_regularly_cogenerating_up_to(F, bound)
        _expect(verdict.holds == every_regular, family=name, verdict=verdict.holds,
                all_canonical_arrows_regular=every_regular)
    # the divisors of 12 need D_2, D_4, D_3: dropping one must break some X
    twelve = _objects(3, 12)
    for q in (2, 3, 4):
        F = [G for G in full if G != mk_dn(q)]
        c.tick()
        broken = [X for X in twelve if not canonical_profile(X, F).preserves_denominators]
        _expect(bool(broken), family=f"without D_{q}", reason="no multiset lost its denominator")


def _exists(c: _Counter, max_points=2, divisors_of=12):
    # pairs of objects x pairs of points
    objs = _objects(max_points, divisors_of, empty=False) + [FiniteMultiset(("0",), (sn.TOP,))]
    for X, Y in product(objs, repeat=2):
        for x, y in product(X.points, Y.points):
            c.tick()
            ok_pre = leq(Y.zeta(y), X.zeta(x)) and Y.zeta(y).is_finite and ONE in Y.denoms
            some = any(f(x) == y for f in enumerate_homs(X, Y))
            if ok_pre:
                f = connect_arrow(X, x, Y, y)
                _expect(f.is_valid() and f(x) == y and some, X=_ms(X), Y=_ms(Y), x=x, y=y)
            else:
                try:
                    connect_arrow(X, x, Y, y)
                except PreconditionError:
                    pass
                else:
                    raise _Failed({"X": _ms(X), "Y": _ms(Y), "x": x, "y": y, "reason": "precondition not reported"})
            if not leq(Y.zeta(y), X.zeta(x)):
                _expect(not some, X=_ms(X), Y=_ms(Y), x=x, y=y, reason="arrow exists against the denominators")


def _partition(c: _Counter, max_points=3, max_indices=3):
    # all Z families covering the points and all compatible K choices; exponential in both
    for n in range(1, max_points + 1):
        pts = [str(i) for i in range(n)]
        subsets = [frozenset(s) for k in range(n + 1) for s in combinations(pts, k)]
        for m in range(1, max_indices + 1):
            for Zs in product(subsets, repeat=m):
                if set().union(*Zs) != set(pts):
                    continue
                # each point joins at most one K_i with x in Z_i
                options = [[None] + [i for i in range(m) if x in Zs[i]] for x in pts]
                for pick in product(*options):
                    c.tick()
                    Ks = [{x for x, i in zip(pts, pick) if i == j} for j in range(m)]
                    a = partition_assign(pts, Ks, list(Zs))
                    for j in range(m):
                        C = {x for x in pts if a[x] == j}
                        _expect(Ks[j] <= C <= Zs[j], points=pts, Ks=[sorted(k) for k in Ks],
                                Zs=[sorted(z) for z in Zs], assignment=a)


def _regular_monos_into(A: FiniteMultiset):
    for k in range(len(A) + 1):
        for sub in combinations(range(len(A)), k):
            B = FiniteMultiset(tuple(A.points[i] for i in sub), tuple(A.denoms[i] for i in sub))
            yield MultisetArrow(B, A, sub)


def _dn_injective(c: _Counter, cod_points=4, target_points=3, divisors_of=12):
    # regular monos into every A (2^|A| each) x every target X x every f: B -> X
    cods = _objects(cod_points, divisors_of)
    targets = _objects(target_points, divisors_of, empty=False)
    good = [X for X in targets if ONE in X.denoms]
    bad = [X for X in targets if ONE not in X.denoms and len(X) <= 2]
    for A in cods:
        for g in _regular_monos_into(A):
            for X in good:
                for f in enumerate_homs(g.dom, X):
                    c.tick()
                    h = extend_along_regular_mono(g, f)
                    if not (h.is_valid() and compose(h, g) == f):
                        raise _Failed({"g": _arrow(g), "f": _arrow(f)})
            for X in bad:
                for f in enumerate_homs(g.dom, X):
                    c.tick()
                    try:
                        extend_along_regular_mono(g, f)
                    except PreconditionError:
                        continue
                    raise _Failed({"g": _arrow(g), "f": _arrow(f), "reason": "missing ν_1 point not reported"})


# -- duality -----------------------------------------------------------------------------


def _duality(c: _Counter, max_points=3, divisors_of=12, functor_points=3):
    # hom bijection on all pairs; functoriality on every composable pair X -> Y -> Z
    # (about 4.5 million at 3 points over the divisors of 12)
    objs = _objects(max_points, divisors_of)
    for X, Y in product(objs, repeat=2):
        c.tick()
        r = check_hom_bijection(X, Y)
        _expect(r.bijection and r.count_ms == r.count_mv, X=_ms(X), Y=_ms(Y), report=r.as_dict())
    for X in objs:
        c.tick()
        _expect(check_identity(X), X=_ms(X), reason="identity")
    small = _objects(functor_points, divisors_of)
    # duals of every hom-set, computed once and looked up by image tuple
    duals = {}
    for X, Y in product(small, repeat=2):
        duals[X, Y] = {f.images: (f, dual_arrow(f)) for f in enumerate_homs(X, Y)}
    for X, Y in product(small, repeat=2):
        fs = list(duals[X, Y].values())
        if not fs:
            continue
        for Z in small:
            gs, gf_duals = list(duals[Y, Z].values()), duals[X, Z]
            c.tick(len(fs) * len(gs))
            for (f, df), (g, dg) in product(fs, gs):
                # witness built only on failure: this loop runs millions of times
                if gf_duals[compose(g, f).images][1] != compose_homs(df, dg):
                    raise _Failed({"f": _arrow(f), "g": _arrow(g), "reason": "functoriality"})


# -- relations and co-relations ------------------------------------------------------------


def _quot_cs(c: _Counter, max_points=3, divisors_of=12):
    for X in _objects(max_points, divisors_of):
        c.tick()
        r = check_quot_cs_iso(X)
        _expect(r.passed, X=_ms(X), witness=r.witness)
    c.tick()
    mutated = check_quot_cs_iso(mk_dn(2), order=order_without_mu)
    _expect(not mutated.passed, reason="order without mu was not caught")


def _corelations(max_points, divisors_of):
    for X in _objects(max_points, divisors_of):
        targets = _objects(2 * len(X), divisors_of)
        yield from enumerate_corelations(X, targets)


def _char_refl(c: _Counter, max_points=2, divisors_of=6):
    # co-relations: pairs of arrows X -> S for S on up to 2|X| points
    for cr in _corelations(max_points, divisors_of):
        c.tick()
        found = reflexive_by_search(cr)
        w = {"q0": _arrow(cr.q0), "q1": _arrow(cr.q1)}
        _expect(found.holds == reflexive_by_relation(cr), **w, reason="routes disagree")
        if found.holds:
            X, S = cr.base, cr.target
            for (i, q), (j, p) in product(enumerate((cr.q0, cr.q1)), repeat=2):
                for a, b in product(range(len(X)), repeat=2):
                    if q.images[a] == p.images[b]:
                        _expect(a == b, **w, reason="distinct points identified")
                _expect(all(S.denoms[q.images[a]] == X.denoms[a] for a in range(len(X))),
                        **w, reason="denominator not preserved")


def _effective(c: _Counter, max_points=2, divisors_of=6):
    for cr in _corelations(max_points, divisors_of):
        if not is_reflexive(cr).holds:
            continue
        c.tick()
        w = {"q0": _arrow(cr.q0), "q1": _arrow(cr.q1)}
        _expect(is_symmetric(cr).holds, **w, reason="not symmetric")
        _expect(is_transitive(cr).holds, **w, reason="not transitive")
        _expect(effectivize(cr).passed, **w, reason="not a cokernel pair")


def _countable(c: _Counter, max_factors=3, factor_divisors_of=3, target_points=2):
    # products of up to max_factors two-point objects; every arrow into every target
    pool = _objects(2, factor_divisors_of, empty=False)
    pool = [X for X in pool if len(X) == 2]
    targets = _objects(target_points, factor_divisors_of, empty=False)
    for k in range(1, max_factors + 1):
        for Xs in combinations_with_replacement(pool, k):
            prod = ms_product(list(Xs))
            for Y in targets:
                for h in enumerate_homs(prod.apex, Y):
                    c.tick()
                    dep = dependency_coordinates(h, prod)
                    w = {"factors": [_ms(X) for X in Xs], "Y": _ms(Y), "h": h.images}
                    _expect(factors_through_coordinates(h, prod, dep), **w, dependency=dep)
                    for i in dep:
                        fewer = [j for j in dep if j != i]
                        _expect(not factors_through_coordinates(h, prod, fewer), **w, dependency=dep, dropped=i)


@dataclass(frozen=True)
class _Entry:
    run: Callable
    defaults: dict
    statement: str


CATALOG: dict[str, _Entry] = {
    "L-CHAIN-HOM": _Entry(_chain_hom, {"max_n": 12, "naive_budget": 10**5},
                          "a homomorphism S_m -> S_n exists iff m divides n, and then it is unique"),
    "L-MV-AXIOMS": _Entry(_mv_axioms, {"max_chain": 12, "max_factors": 3, "max_factor_n": 6, "mutation_seed": 0},
                          "finite products of chains satisfy the MV axioms; tampered sums do not"),
    "L-SUPREMUM": _Entry(_supremum, {"max_exponent": 6, "divisibility_bound": 200},
                         "a supernatural number is the join of the prime powers below it; "
                         "the order on finite values is divisibility"),
    "L-IRRED": _Entry(_irreducible, {"bound": 10**4},
                      "the join-irreducible finite values are exactly the prime powers"),
    "L-TOPO": _Entry(_topology, {}, "identities and non-inclusions between the six topology families"),
    "L-ARROWS": _Entry(_arrows, {"max_points": 3, "divisors_of": 12},
                       "monic, epic, regular monic, regular epic and iso arrows are characterized pointwise"),
    "L-LIMITS": _Entry(_limits, {"max_points": 2, "divisors_of": 6},
                       "products and equalizers carry the join of the leg denominators"),
    "L-COLIMITS": _Entry(_colimits, {"max_points": 2, "divisors_of": 6},
                         "coproducts and coequalizers carry the meet over preimages"),
    "L-COGEN": _Entry(_cogen, {"family_points": 2, "family_divisors_of": 6, "max_family": 2,
                               "test_points": 3, "test_divisors_of": 6},
                      "a family co-generates iff a member has two points of denominator 1"),
    "L-REGCOGEN": _Entry(_regcogen, {"bound": 12, "test_points": 2, "budget": 10**4},
                         "canonical arrows preserve denominators iff every needed prime power is supplied"),
    "L-EXISTS": _Entry(_exists, {"max_points": 2, "divisors_of": 12},
                       "an arrow with f(x) = y exists when the denominators allow it and Y has a point of denominator 1"),
    "L-PARTITION": _Entry(_partition, {"max_points": 3, "max_indices": 3},
                          "covering sets with disjoint kernels admit a sandwiched partition"),
    "L-DN-INJ": _Entry(_dn_injective, {"cod_points": 4, "target_points": 3, "divisors_of": 12},
                       "multisets with finite denominators and a point of denominator 1 extend along regular monos"),
    "L-DUALITY": _Entry(_duality, {"max_points": 3, "divisors_of": 12, "functor_points": 3},
                        "Hom(X, Y) is in bijection with Hom(A_Y, A_X), functorially"),
    "L-QUOTCS": _Entry(_quot_cs, {"max_points": 3, "divisors_of": 12},
                       "quotients of X correspond to multiset relations on X, as ordered sets"),
    "L-CHARREFL": _Entry(_char_refl, {"max_points": 2, "divisors_of": 6},
                         "a co-relation is reflexive iff its relation only identifies copies of a point "
                         "and keeps their denominators"),
    "L-EFFECTIVE": _Entry(_effective, {"max_points": 2, "divisors_of": 6},
                          "reflexive co-relations are symmetric, transitive and cokernel pairs"),
    "L-COUNTABLE": _Entry(_countable, {"max_factors": 3, "factor_divisors_of": 3, "target_points": 2},
                          "an arrow out of a finite product depends exactly on its computed coordinates"),
}


def run_check(check_id: str, bounds: dict | None = None) -> CheckResult:
    try:
        entry = CATALOG[check_id]
    except KeyError:
        raise UnknownIdentifier(f"unknown check {check_id!r}; known: {sorted(CATALOG)}") from None
    unknown = set(bounds or {}) - set(entry.defaults)
    if unknown:
        raise UnknownIdentifier(f"unknown bounds for {check_id}: {sorted(unknown)}")
    used = {**entry.defaults, **(bounds or {})}
    counter = _Counter()
    try:
        entry.run(counter, **used)
    except _Failed as failure:
        return CheckResult(check_id, "fail", counter.n, used, failure.witness, entry.statement)
    except InternalError as exc:
        return CheckResult(check_id, "fail", counter.n, used, {"internal_error": str(exc)}, entry.statement)
    return CheckResult(check_id, "pass", counter.n, used, None, entry.statement)


def run_all(bounds: dict[str, dict] | None = None) -> list[CheckResult]:
    return [run_check(k, (bounds or {}).get(k)) for k in CATALOG]
