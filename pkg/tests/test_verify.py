import json

import pytest

import mvdual.verify as verify
from mvdual.errors import DomainError, UnknownIdentifier
from mvdual.multiset import Verdict, generate_multisets
from mvdual.verify import CATALOG, run_check

# small bounds so every check runs in well under a second
SMALL = {
    "L-CHAIN-HOM": {"max_n": 4},
    "L-MV-AXIOMS": {"max_chain": 4, "max_factors": 2, "max_factor_n": 3},
    "L-SUPREMUM": {"max_exponent": 3, "divisibility_bound": 30},
    "L-IRRED": {"bound": 200},
    "L-TOPO": {},
    "L-ARROWS": {"max_points": 2, "divisors_of": 4},
    "L-LIMITS": {"max_points": 1, "divisors_of": 6},
    "L-COLIMITS": {"max_points": 1, "divisors_of": 6},
    "L-COGEN": {"family_points": 1, "family_divisors_of": 2, "max_family": 2, "test_points": 2},
    "L-REGCOGEN": {"bound": 4, "test_points": 2},
    "L-EXISTS": {"max_points": 1, "divisors_of": 6},
    "L-PARTITION": {"max_points": 2, "max_indices": 2},
    "L-DN-INJ": {"cod_points": 2, "target_points": 2, "divisors_of": 4},
    "L-DUALITY": {"max_points": 1, "divisors_of": 6, "functor_points": 1},
    "L-QUOTCS": {"max_points": 2, "divisors_of": 4},
    "L-CHARREFL": {"max_points": 1, "divisors_of": 6},
    "L-EFFECTIVE": {"max_points": 1, "divisors_of": 6},
    "L-COUNTABLE": {"max_factors": 2, "factor_divisors_of": 2, "target_points": 1},
}


def test_catalog_is_complete():
    assert set(SMALL) == set(CATALOG) and len(CATALOG) == 18
    for entry in CATALOG.values():
        assert entry.statement


@pytest.mark.parametrize("check_id", sorted(SMALL))
def test_check_passes_at_small_bounds(check_id):
    r = run_check(check_id, SMALL[check_id])
    assert r.passed, r.witness
    assert r.instances_tested > 0
    assert r.bounds == {**CATALOG[check_id].defaults, **SMALL[check_id]}


def test_reports_are_deterministic():
    a = run_check("L-QUOTCS", SMALL["L-QUOTCS"]).to_json()
    b = run_check("L-QUOTCS", SMALL["L-QUOTCS"]).to_json()
    assert a == b
    obj = json.loads(a)
    assert obj["verdict"] == "pass" and obj["witness"] is None and obj["bounds"]["max_points"] == 2


def test_chain_hom_instance_count():
    r = run_check("L-CHAIN-HOM")
    assert r.passed and r.instances_tested == 144


def test_unknown_ids_and_bounds():
    with pytest.raises(UnknownIdentifier):
        run_check("L-NOPE")
    with pytest.raises(UnknownIdentifier):
        run_check("L-TOPO", {"size": 3})


def test_failures_carry_a_witness(monkeypatch):
    monkeypatch.setattr(verify, "is_cogenerating", lambda family: Verdict(True))
    r = run_check("L-COGEN", SMALL["L-COGEN"])
    assert not r.passed and r.witness["predicted"] is True and r.witness["direct"] is False
    assert json.loads(r.to_json())["verdict"] == "fail"


def test_mutation_seed_does_not_matter():
    for seed in range(5):
        assert run_check("L-MV-AXIOMS", {**SMALL["L-MV-AXIOMS"], "mutation_seed": seed}).passed


def test_regcogen_needs_two_point_objects():
    with pytest.raises(DomainError):
        run_check("L-REGCOGEN", {"bound": 4, "test_points": 1})


def test_generator_counts():
    assert len(generate_multisets(1, [1])) == 1
    assert len(generate_multisets(2, [1, 2])) == 5
    assert len(generate_multisets(2, [1, 2], include_empty=True)) == 6
