from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from mvdual.errors import BudgetExceeded, DomainError
from mvdual.multiset import multiset
from mvdual.mv import (
    FiniteMVAlgebra,
    MVHomomorphism,
    chain,
    chain_product,
    check_mv_axioms,
    check_tables,
    compose_homs,
    element_from_json,
    element_to_json,
    enumerate_homs_bruteforce,
    enumerate_homs_naive,
    hom_exists_chain,
    identity_hom,
    leq_el,
    mutate_entry,
    mutate_mod_one,
    neg,
    oplus,
    zero,
)
from mvdual.supernat import TOP

small_algebras = st.lists(st.integers(1, 4), min_size=0, max_size=2).map(chain_product)


def test_operation_examples():
    S6, S3 = chain(6), chain(3)
    assert oplus(S6, (2,), (3,)) == (5,)
    assert oplus(S6, (4,), (5,)) == (6,)
    assert neg(S3, (1,)) == (2,)
    assert zero(chain_product([2, 3])) == (0, 0)
    with pytest.raises(DomainError):
        oplus(S6, (7,), (0,))
    with pytest.raises(DomainError):
        oplus(S6, (1, 1), (0,))


def test_leq_examples():
    S6 = chain(6)
    assert all(leq_el(S6, zero(S6), x) for x in S6.elements())
    assert leq_el(S6, (2,), (4,))
    P = chain_product([2, 3])
    assert not leq_el(P, (1, 0), (0, 1)) and not leq_el(P, (0, 1), (1, 0))


def test_leq_is_componentwise_order():
    for ns in ([2, 2, 2], [3, 8], [35], [5, 5]):
        A = chain_product(ns)
        assert A.size <= 36
        for x, y in product(A.elements(), repeat=2):
            assert leq_el(A, x, y) == all(a <= b for a, b in zip(x, y))


def test_elements_are_lexicographic_and_indexed():
    A = chain_product([2, 3])
    els = A.elements()
    assert els == sorted(els) and len(els) == 12
    assert all(A.index(x) == i for i, x in enumerate(els))
    assert A.as_fractions((1, 2)) == (Fraction(1, 2), Fraction(2, 3))


def test_axioms_on_examples():
    assert check_mv_axioms(chain(6)).passed
    assert check_mv_axioms(chain_product([2, 3])).passed
    assert check_mv_axioms(chain_product([])).passed
    with pytest.raises(BudgetExceeded):
        check_mv_axioms(chain_product([6, 6, 6, 6]))


def test_mod_one_mutation_breaks_characteristic_axiom():
    r = check_tables(mutate_mod_one(chain(6)))
    assert not r.passed
    ok, witness = r.results["characteristic"]
    assert not ok and witness is not None


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=1, max_size=2), st.integers(0, 1000))
def test_single_entry_mutation_is_detected(ns, seed):
    A = chain_product(ns)
    if A.size < 2:
        return
    tables, (x, y) = mutate_entry(A, seed)
    assert x != y
    r = check_tables(tables)
    assert not r.passed and r.failures()


def test_hom_examples():
    homs = enumerate_homs_bruteforce(chain(2), chain(6))
    assert len(homs) == 1 and homs[0]((1,)) == (3,)
    assert enumerate_homs_bruteforce(chain(3), chain(2)) == []
    homs = enumerate_homs_bruteforce(chain_product([2, 2]), chain(2))
    assert [h.images for h in homs] == [((0,), (1,)), ((1,), (0,))]


def test_chain_hom_existence():
    assert hom_exists_chain(2, 6) and not hom_exists_chain(4, 6)
    assert all(hom_exists_chain(1, n) for n in range(1, 20))
    with pytest.raises(DomainError):
        hom_exists_chain(0, 3)


def test_chain_homs_match_oracle():
    for m, n in product(range(1, 6), repeat=2):
        assert len(enumerate_homs_bruteforce(chain(m), chain(n))) == oracles.chain_hom_count(m, n)


@settings(max_examples=25, deadline=None)
@given(small_algebras, small_algebras)
def test_search_agrees_with_naive_enumeration(A, B):
    if B.size ** A.size > 10**5:
        return
    fast = sorted(tuple(h.table()) for h in enumerate_homs_bruteforce(A, B))
    naive = sorted(tuple(int(v) for v in h) for h in enumerate_homs_naive(A, B))
    assert fast == naive


@settings(max_examples=25, deadline=None)
@given(small_algebras, small_algebras)
def test_homs_preserve_order(A, B):
    for h in enumerate_homs_bruteforce(A, B):
        assert h.is_homomorphism()
        for x, y in product(A.elements(), repeat=2):
            if leq_el(A, x, y):
                assert leq_el(B, h(x), h(y))


def test_non_homomorphism_is_rejected():
    h = MVHomomorphism(chain(2), chain(4), ((1,),))
    assert not h.is_homomorphism()


def test_composition_and_identity():
    A, B, C = chain(2), chain(4), chain(8)
    f = enumerate_homs_bruteforce(A, B)[0]
    g = enumerate_homs_bruteforce(B, C)[0]
    gf = compose_homs(g, f)
    assert gf.is_homomorphism() and gf.images == ((4,),)
    assert compose_homs(identity_hom(B), f) == f
    with pytest.raises(DomainError):
        compose_homs(f, f)


def test_hom_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_homs_bruteforce(chain_product([6, 6, 6]), chain(12), budget=100)
    with pytest.raises(BudgetExceeded):
        enumerate_homs_naive(chain(6), chain(6), budget=10)


def test_hom_table_matches_pointwise_values():
    A, B = chain_product([2, 3]), chain_product([6, 2])
    for h in enumerate_homs_bruteforce(A, B):
        tab = h.table()
        assert np.array_equal(tab, [B.index(h(x)) for x in A.elements()])


def test_element_json():
    A = chain_product([2, 3])
    assert element_to_json(A, (1, 2)) == {"0": [1, 2], "1": [2, 3]}
    assert element_from_json(A, {"0": [1, 2], "1": [2, 3]}) == (1, 2)
    assert element_from_json(A, {"0": [2, 4], "1": [0, 1]}) == (1, 0)
    with pytest.raises(DomainError):
        element_from_json(A, {"0": [1, 3], "1": [0, 3]})


def test_presentation_must_be_finite():
    with pytest.raises(DomainError):
        FiniteMVAlgebra(multiset([TOP]))
