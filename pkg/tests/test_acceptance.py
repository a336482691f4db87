"""Acceptance criteria 1-11, each at its stated bounds and time limit.

Every test prints one ``criterion N: PASS|FAIL ...`` line.  Run with
``pytest tests/test_acceptance.py -v`` to see them next to pytest's verdicts.
"""

import time

import pytest

from mvdual import supernat as sn
from mvdual.multiset import generate_multisets
from mvdual.mv import chain_product, check_tables, mutate_entry
from mvdual.supernat import TopologyFamily, from_natural
from mvdual.verify import run_check


@pytest.fixture
def report(capsys):
    def emit(n, title, ok, detail=""):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}  {title}  {detail}".rstrip())
    return emit


def timed(check_id, bounds=None):
    t = time.perf_counter()
    r = run_check(check_id, bounds)
    return r, time.perf_counter() - t


def test_criterion_01_chain_hom_divisibility(report):
    r, dt = timed("L-CHAIN-HOM", {"max_n": 12})
    ok = r.passed and r.instances_tested == 144 and dt < 30
    report(1, "S_m -> S_n hom count is [m | n] for m, n <= 12", ok, f"{r.instances_tested} pairs, {dt:.1f}s")
    assert ok, r.witness


def test_criterion_02_mv_axioms(report):
    r, dt = timed("L-MV-AXIOMS", {"max_chain": 12, "max_factors": 3, "max_factor_n": 6, "mutation_seed": 0})
    tables, entry = mutate_entry(chain_product([2, 3]), seed=0)
    mutated = check_tables(tables)
    witnessed = not mutated.passed and all(mutated.results[k][1] is not None for k in mutated.failures())
    ok = r.passed and witnessed and dt < 60
    report(2, "MV axioms on chains and products; seeded mutation caught", ok,
           f"{r.instances_tested} algebras, mutation at {entry} -> {mutated.failures()}, {dt:.1f}s")
    assert ok, r.witness


def test_criterion_03_duality(report):
    r, dt = timed("L-DUALITY", {"max_points": 3, "divisors_of": 12, "functor_points": 3})
    ok = r.passed and dt < 180
    report(3, "Hom(X, Y) ~ Hom(A_Y, A_X) and functoriality, <= 3 points, divisors of 12", ok,
           f"{r.instances_tested} instances, {dt:.1f}s")
    assert ok, r.witness


def test_criterion_04_arrow_classification(report):
    r, dt = timed("L-ARROWS", {"max_points": 3, "divisors_of": 12})
    report(4, "classification flags vs cancellation and (co)equalizer searches", r.passed,
           f"{r.instances_tested} arrows, {dt:.1f}s")
    assert r.passed, r.witness


def test_criterion_05_limits_and_colimits(report):
    lim, dt1 = timed("L-LIMITS")
    col, dt2 = timed("L-COLIMITS")
    ok = lim.passed and col.passed
    report(5, "(co)limit universal properties and join/meet denominators", ok,
           f"{lim.instances_tested} + {col.instances_tested} constructions, {dt1 + dt2:.1f}s")
    assert ok, (lim.witness, col.witness)


def test_criterion_06_injectivity_extension(report):
    part, _ = timed("L-PARTITION")
    ext, dt = timed("L-DN-INJ", {"cod_points": 4, "target_points": 3, "divisors_of": 12})
    ok = part.passed and ext.passed
    report(6, "sandwiched partitions and extension along regular monos (|cod| <= 4)", ok,
           f"{part.instances_tested} + {ext.instances_tested} instances, {dt:.1f}s")
    assert ok, (part.witness, ext.witness)


def test_criterion_07_cogeneration(report):
    cog, _ = timed("L-COGEN")
    reg, dt = timed("L-REGCOGEN", {"bound": 12})
    ok = cog.passed and reg.passed
    report(7, "co-generation vs separation; canonical arrows vs {2} + D_(p^k), p^k <= 12", ok,
           f"{cog.instances_tested} + {reg.instances_tested} instances, {dt:.1f}s")
    assert ok, (cog.witness, reg.witness)


def test_criterion_08_quot_cs(report):
    r, dt = timed("L-QUOTCS", {"max_points": 3, "divisors_of": 12})
    report(8, "quotients vs multiset relations as ordered sets, <= 3 points", r.passed,
           f"{r.instances_tested} multisets, {dt:.1f}s")
    assert r.passed, r.witness


def test_criterion_09_reflexive_is_effective(report):
    refl, _ = timed("L-CHARREFL", {"max_points": 2, "divisors_of": 6})
    eff, dt = timed("L-EFFECTIVE", {"max_points": 2, "divisors_of": 6})
    ok = refl.passed and eff.passed and eff.instances_tested > 0
    report(9, "reflexivity routes agree; reflexive co-relations are effective", ok,
           f"{refl.instances_tested} co-relations, {eff.instances_tested} reflexive, {dt:.1f}s")
    assert ok, (refl.witness, eff.witness)


def test_criterion_10_topology(report):
    r, _ = timed("L-TOPO")
    nu2, nu3 = from_natural(2), from_natural(3)
    counterexamples = (
        sn.topology_member(TopologyFamily("T1", p=2, k=0), nu2)
        and not sn.topology_member(TopologyFamily("T4", n=2), nu3)
        and sn.topology_member(TopologyFamily("T5", n=2), nu3)
        and not sn.topology_member(TopologyFamily("T4", n=1), from_natural(1))
    )
    ok = r.passed and counterexamples
    report(10, "topology identities on the standard universe; nu_2 / nu_3 counterexamples", ok,
           f"{r.instances_tested} identities")
    assert ok, r.witness


def test_criterion_11_supernatural_lattice(report):
    irr, dt1 = timed("L-IRRED", {"bound": 10**4})
    sup, dt2 = timed("L-SUPREMUM", {"divisibility_bound": 200})
    ok = irr.passed and sup.passed
    report(11, "join-irreducibles are prime powers up to 10^4; divisibility order up to 200", ok,
           f"{irr.instances_tested} + {sup.instances_tested} instances, {dt1 + dt2:.1f}s")
    assert ok, (irr.witness, sup.witness)


def test_suite_objects_are_as_stated():
    # the instance universes the criteria quote
    assert len(generate_multisets(3, sn.divisors(12), include_empty=True)) == 84
    assert len(generate_multisets(2, sn.divisors(6), include_empty=True)) == 15
