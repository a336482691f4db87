from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from mvdual.dot import construction_to_dot, diagram_to_dot
from mvdual.errors import BoundaryMismatch, BudgetExceeded, PreconditionError
from mvdual.mscat import (
    Construction,
    canonical_arrow_to_family,
    canonical_profile,
    cokernel_pair,
    coequalizer,
    copair,
    coproduct,
    dependency_coordinates,
    equalizer,
    extend_along_regular_mono,
    factors_through_coordinates,
    kernel_pair,
    partition_assign,
    product as ms_product,
    pullback,
    pushout,
    standard_probes,
    universal_property_check,
)
from mvdual.multiset import (
    EMPTY,
    FiniteMultiset,
    check_arrow,
    classify,
    compose,
    enumerate_homs,
    factor_through_epi,
    generate_multisets,
    identity,
    mk_dn,
    mk_point,
    mk_two,
    multiset,
)
from mvdual.supernat import ONE, from_natural

small_lists = st.lists(st.sampled_from([1, 2, 3, 6]), min_size=0, max_size=2)


def nums(X):
    return [d.to_int() for d in X.denoms]


def test_product_examples():
    P, _ = ms_product([mk_two(), mk_two()])
    assert len(P) == 4 and set(P.denoms) == {ONE}
    P, (p0, p1) = ms_product([mk_dn(2), mk_dn(3)])
    assert P.zeta("(1,1)") == from_natural(6)
    assert p0.is_valid() and p1.is_valid()
    T, legs = ms_product([])
    assert T.points == ("()",) and T.denoms == (ONE,) and legs == ()


@given(small_lists, small_lists)
def test_product_denominators_match_oracle(xs, ys):
    P, _ = ms_product([multiset(xs), multiset(ys)])
    assert nums(P) == oracles.product_denoms(xs, ys)


def test_coproduct_examples():
    C, _ = coproduct([mk_two(), mk_two()])
    assert len(C) == 4 and set(C.denoms) == {ONE}
    C, (i0,) = coproduct([mk_dn(2)])
    assert classify(i0).iso
    C, inj = coproduct([])
    assert C == EMPTY and inj == ()


def test_equalizer_examples():
    f = enumerate_homs(mk_dn(6), mk_dn(2))[1]
    E, e = equalizer(f, f)
    assert classify(e).iso
    two = mk_two()
    c0, c1 = (check_arrow(two, two, m) for m in ({"0": "0", "1": "0"}, {"0": "1", "1": "1"}))
    assert len(equalizer(c0, c1).apex) == 0
    swap = check_arrow(two, two, {"0": "1", "1": "0"})
    assert len(equalizer(identity(two), swap).apex) == 0
    with pytest.raises(BoundaryMismatch):
        equalizer(f, identity(mk_dn(6)))


def test_coequalizer_examples():
    f = enumerate_homs(mk_dn(6), mk_dn(2))[1]
    Q, q = coequalizer(f, f)
    assert classify(q).iso
    # the two points of D_6 picked out from a ν_6 point
    a = check_arrow(mk_point(6), mk_dn(6), {"0": "0"})
    b = check_arrow(mk_point(6), mk_dn(6), {"0": "1"})
    Q, q = coequalizer(a, b)
    assert len(Q) == 1 and Q.denoms == (ONE,)
    assert classify(q).regular_epic
    two = mk_two()
    Q, q = coequalizer(identity(two), check_arrow(two, two, {"0": "1", "1": "0"}))
    assert len(Q) == 1 and Q.denoms == (ONE,)


@given(small_lists, small_lists, st.data())
@settings(max_examples=80)
def test_coequalizer_matches_oracle(xs, ys, data):
    X, Y = multiset(xs), multiset(ys)
    homs = enumerate_homs(X, Y)
    if not homs:
        return
    f = data.draw(st.sampled_from(homs))
    g = data.draw(st.sampled_from(homs))
    Q, q = coequalizer(f, g)
    classes = oracles.coequalizer_classes(len(ys), list(zip(f.images, g.images)))
    assert nums(Q) == oracles.class_denoms(ys, classes)
    assert classify(q).regular_epic


def test_pullback_and_pushout():
    f = enumerate_homs(mk_two(), mk_point())[0]
    assert pullback(f, f).apex == kernel_pair(f).apex
    X = mk_dn(6)
    Q, (q0, q1) = pushout(identity(X), identity(X))
    assert len(Q) == len(X) and classify(q0).iso and q0 == q1
    with pytest.raises(BoundaryMismatch):
        pullback(f, identity(mk_two()))


def test_kernel_pair_examples():
    m = check_arrow(mk_point(), mk_dn(2), {"0": "0"})
    R, (p0, p1) = kernel_pair(m)
    assert p0 == p1
    f = enumerate_homs(mk_two(), mk_point())[0]
    R, _ = kernel_pair(f)
    assert len(R) == 4 and set(R.denoms) == {ONE}
    X = multiset([2, 3])
    R, _ = kernel_pair(enumerate_homs(X, mk_point())[0])
    assert nums(R) == [2, 6, 6, 3]


def test_cokernel_pair_example():
    S, (q0, q1) = cokernel_pair(check_arrow(mk_point(), mk_dn(2), {"0": "0"}))
    assert nums(S) == [1, 2, 2]
    assert q0("0") == q1("0") and q0("1") != q1("1")


def test_universal_property_examples():
    con = ms_product([mk_dn(2), mk_dn(3)])
    probes = generate_multisets(2, [1, 2, 3, 6], include_empty=True)
    assert universal_property_check(con, probes).passed
    assert universal_property_check(coproduct([mk_two(), mk_two()]), probes).passed


def _corrupt(con, x, d):
    P = con.apex
    denoms = tuple(from_natural(d) if p == x else e for p, e in zip(P.points, P.denoms))
    P2 = FiniteMultiset(P.points, denoms)
    legs = tuple(type(leg)(P2, leg.cod, leg.images) for leg in con.legs)
    return Construction(con.kind, con.diagram, P2, legs, legs)


def test_corrupted_product_is_rejected():
    con = ms_product([mk_dn(2), mk_dn(3)])
    probes = generate_multisets(2, [1, 2, 3, 6], include_empty=True)
    # too large: the projections stay arrows but the ν_6 probe picking (1, 1) has no mediator
    r = universal_property_check(_corrupt(con, "(1,1)", 12), probes)
    assert not r.passed and r.witness["mediators"] == 0
    assert r.witness["probe_denominators"] == ["2·3"]
    # too small: the projections stop being arrows
    r = universal_property_check(_corrupt(con, "(1,1)", 1), probes)
    assert not r.passed and r.witness["reason"] == "leg is not an arrow"


def test_standard_probe_checks_on_small_instances():
    objs = generate_multisets(2, [1, 2, 3], include_empty=True)
    for X, Y in product(objs, repeat=2):
        for con in (ms_product([X, Y]), coproduct([X, Y])):
            assert universal_property_check(con, standard_probes(con)).passed
        for f, g in product(enumerate_homs(X, Y), repeat=2):
            e = equalizer(f, g)
            assert classify(e.out).regular_monic
            assert universal_property_check(e, standard_probes(e)).passed
            c = coequalizer(f, g)
            assert classify(c.out).regular_epic
            assert universal_property_check(c, standard_probes(c)).passed


def test_regular_epis_are_coequalizers_of_kernel_pairs():
    objs = generate_multisets(2, [1, 2, 3, 6], include_empty=True)
    for X, Y in product(objs, repeat=2):
        for f in enumerate_homs(X, Y):
            _, q = coequalizer(*kernel_pair(f).out)
            eps = factor_through_epi(q, f) if classify(f).epic else None
            assert classify(f).regular_epic == (eps is not None and classify(eps).iso)


def test_partition_assign_examples():
    pts = ["a", "b", "c"]
    assert partition_assign(pts, [{"a"}], [set(pts)]) == {"a": 0, "b": 0, "c": 0}
    assert partition_assign(pts, [set(), set()], [{"a"}, {"b", "c"}]) == {"a": 0, "b": 1, "c": 1}
    Zs = [{"a", "b"}, {"b", "c"}, {"a", "c"}]
    Ks = [set(), {"c"}, set()]
    a = partition_assign(pts, Ks, Zs)
    assert a == {"a": 0, "b": 0, "c": 1}
    for i, (K, Z) in enumerate(zip(Ks, Zs)):
        C = {x for x in pts if a[x] == i}
        assert K <= C <= Z


def test_partition_assign_reports_violations():
    with pytest.raises(PreconditionError) as exc:
        partition_assign(["a", "b"], [{"a"}, {"a"}], [{"a"}, {"b"}])
    assert len(exc.value.violations) == 2
    with pytest.raises(PreconditionError):
        partition_assign(["a", "b"], [set()], [{"a"}])


def test_extend_examples():
    f = enumerate_homs(mk_dn(6), mk_dn(2))[1]
    assert extend_along_regular_mono(identity(mk_dn(6)), f) == f
    g = check_arrow(mk_point(), mk_dn(6), {"0": "0"})
    f = check_arrow(mk_point(), mk_dn(6), {"0": "0"})
    h = extend_along_regular_mono(g, f)
    assert compose(h, g) == f and h.is_valid() and h("1") in ("0", "1")
    g6 = check_arrow(mk_point(6), mk_dn(6), {"0": "1"})
    no_unit = multiset([2, 3])
    with pytest.raises(PreconditionError) as exc:
        extend_along_regular_mono(g6, check_arrow(mk_point(6), no_unit, {"0": "0"}))
    assert "no point of denominator" in exc.value.violations[0]


def test_extend_rejects_non_regular_mono():
    g = check_arrow(mk_point(6), mk_dn(2), {"0": "1"})
    with pytest.raises(PreconditionError) as exc:
        extend_along_regular_mono(g, check_arrow(mk_point(6), mk_two(), {"0": "0"}))
    assert "regular monic" in exc.value.violations[0]


def test_canonical_arrow_examples():
    r = canonical_arrow_to_family(mk_dn(2), [mk_two(), mk_dn(2)])
    assert r.flags.regular_monic
    r = canonical_arrow_to_family(mk_dn(2), [mk_two()])
    assert r.flags.monic and not r.flags.regular_monic
    assert canonical_profile(mk_dn(2), [mk_two()]).not_preserved == ["1"]
    r = canonical_arrow_to_family(mk_point(), [mk_dn(3)])
    assert r.flags.regular_monic
    with pytest.raises(BudgetExceeded) as exc:
        canonical_arrow_to_family(multiset([1, 1, 1]), [mk_two()], budget=100)
    assert exc.value.required == 2**8


def test_dependency_coordinates():
    con = ms_product([mk_two(), mk_dn(2), mk_dn(3)])
    Y = mk_two()
    first = con.legs[0]
    h = compose(identity(Y), type(first)(con.apex, Y, first.images))
    assert dependency_coordinates(h, con) == [0]
    assert factors_through_coordinates(h, con, [0])
    assert not factors_through_coordinates(h, con, [])
    const = type(first)(con.apex, Y, (0,) * len(con.apex))
    assert dependency_coordinates(const, con) == []


def test_copair():
    two = mk_two()
    (c, joint) = copair([identity(two), identity(two)])
    assert joint.images == (0, 1, 0, 1) and classify(joint).epic


def test_dot_export():
    con = cokernel_pair(check_arrow(mk_point(), mk_dn(2), {"0": "0"}))
    dot = construction_to_dot(con, point_edges=True)
    assert dot.startswith('digraph "colimit"') and "monic" in dot and "1 : 2" in dot
    f = check_arrow(multiset({"a": 12}), multiset({"b": 4}), {"a": "b"})
    text = diagram_to_dot({"X": f.dom, "Y": f.cod}, [("f", "X", "Y", f)])
    assert "a : 2^2·3" in text and "f [monic, epic]" in text
