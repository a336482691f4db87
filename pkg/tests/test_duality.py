from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from mvdual.duality import algebra_of, check_functoriality, check_hom_bijection, check_identity, dual_arrow
from mvdual.errors import DomainError
from mvdual.multiset import check_arrow, compose, enumerate_homs, generate_multisets, identity, mk_point, mk_two, multiset
from mvdual.mv import chain, chain_product, enumerate_homs_bruteforce, identity_hom
from mvdual.supernat import TOP

lists12 = st.lists(st.sampled_from([1, 2, 3, 4, 6, 12]), min_size=0, max_size=3)


def test_algebra_of_examples():
    assert algebra_of(mk_point(6)) == chain(6)
    assert algebra_of(mk_two()).size == 4
    assert algebra_of(multiset([2, 3])) == chain_product([2, 3])
    with pytest.raises(DomainError):
        algebra_of(multiset([TOP]))


def test_dual_arrow_examples():
    X = multiset([4, 6])
    assert dual_arrow(identity(X)) == identity_hom(algebra_of(X))
    f = check_arrow(mk_point(6), mk_point(2), {"0": "0"})
    h = dual_arrow(f)
    assert h((1,)) == (3,)
    assert [h] == enumerate_homs_bruteforce(chain(2), chain(6))


def test_dual_reads_values_as_rationals():
    # the value e(f(x)) reappears at x as the same rational number
    X, Y = multiset([12, 4, 6]), multiset([2, 4])
    for f in enumerate_homs(X, Y):
        h = dual_arrow(f)
        A_Y, A_X = algebra_of(Y), algebra_of(X)
        for e in A_Y.elements():
            got = A_X.as_fractions(h(e))
            want = A_Y.as_fractions(e)
            assert all(got[i] == want[f.images[i]] for i in range(len(X)))


def test_hom_bijection_examples():
    r = check_hom_bijection(mk_point(2), mk_point(6))
    assert (r.count_ms, r.count_mv, r.bijection) == (0, 0, True)
    r = check_hom_bijection(mk_point(6), mk_point(2))
    assert (r.count_ms, r.count_mv, r.bijection) == (1, 1, True)
    r = check_hom_bijection(mk_two(), mk_two())
    assert (r.count_ms, r.count_mv, r.bijection) == (4, 4, True)


@settings(max_examples=60, deadline=None)
@given(lists12, lists12)
def test_hom_bijection_property(xs, ys):
    r = check_hom_bijection(multiset(xs), multiset(ys))
    assert r.bijection and r.count_ms == r.count_mv, r.as_dict()


def test_functoriality_on_small_objects():
    objs = generate_multisets(2, [1, 2, 4], include_empty=True)
    for X in objs:
        assert check_identity(X)
    for X, Y, Z in product(objs, repeat=3):
        for f, g in product(enumerate_homs(X, Y), enumerate_homs(Y, Z)):
            assert check_functoriality(f, g)
            assert dual_arrow(compose(g, f)).is_homomorphism()
