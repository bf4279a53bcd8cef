import json
import math

import pytest

from _brute import golomb_closure_formula, power_classes
from golomb_lab.errors import DomainError
from golomb_lab.orbit_closures import orbit_closure
from golomb_lab.periodic_sets import PeriodicSet, finite, from_progression, residue_classes, union
from golomb_lab.verify import (
    SUITES,
    VerificationReport,
    check_unit_group,
    closure_exclusion_moduli,
    full_oracle_bound,
    golomb_closure_oracle,
    golomb_closure_oracle_slow,
    lemma_suite,
    padic_orbit_oracle,
    reconstruct_n,
    unique_prime_predecessor_check,
)


def test_oracle_example():
    got = golomb_closure_oracle(from_progression(2, 3), 30, 500)
    assert got == frozenset(x for x in range(1, 501) if x % 3 in (0, 2))


def test_oracle_matches_formula_at_full_bound():
    for b in range(2, 25):
        for a in range(1, b):
            if math.gcd(a, b) == 1:
                got = golomb_closure_oracle(from_progression(a, b), full_oracle_bound(b), 200)
                assert got == frozenset(golomb_closure_formula(a, b, 200))


@pytest.mark.parametrize(
    "S",
    [
        from_progression(2, 3),
        from_progression(7, 4),
        union(from_progression(5, 6), finite([4, 9])),
        residue_classes(10, [1, 3]),
        PeriodicSet(9, 4, [1], [2, 6]),
    ],
)
@pytest.mark.parametrize("bound", [1, 5, 12, 24])
def test_fast_oracle_matches_slow(S, bound):
    assert golomb_closure_oracle(S, bound, 120) == golomb_closure_oracle_slow(S, bound, 120)


def test_oracle_shrinks_with_bound():
    S = from_progression(5, 12)
    previous = None
    for bound in range(1, 40):
        got = golomb_closure_oracle(S, bound, 300)
        if previous is not None:
            assert got <= previous
        previous = got
    kill = closure_exclusion_moduli(S, 39, 300)
    assert ((kill == 0) | (kill <= 39)).all()


def test_oracle_domain():
    with pytest.raises(DomainError):
        golomb_closure_oracle(from_progression(1, 2), 0, 10)


@pytest.mark.parametrize("a, p", [(4, 3), (5, 2), (3, 2), (7, 2), (10, 7), (12, 11)])
def test_padic_oracle_stabilizes(a, p):
    X = orbit_closure(a, p)
    for depth in range(X.level, X.level + 3):
        assert padic_orbit_oracle(a, p, depth) == X.set


def test_padic_oracle_classes():
    got = padic_orbit_oracle(4, 3, 3)
    assert {x for x in range(1, 28) if x in got} == {x for x in range(1, 28) if x % 3 == 1}
    assert {x % 27 for x in range(1, 28) if x in got} == power_classes(4, 27)


@pytest.mark.parametrize("n", [2, 3, 4, 10, 17, 97, 360, 1001, 4096])
def test_reconstruct(n):
    assert reconstruct_n(n) == n


def test_reconstruct_domain():
    with pytest.raises(DomainError):
        reconstruct_n(1)


def test_unique_prime_predecessor():
    report = unique_prime_predecessor_check(10**4)
    assert report.passed and report.cases_checked == 1228


@pytest.mark.parametrize("p, n", [(2, 1), (2, 2), (2, 10), (3, 5), (97, 3)])
def test_unit_group_enumeration(p, n):
    assert check_unit_group(p, n) == []


@pytest.mark.parametrize(
    "lemma_id, params, cases",
    [
        ("index", {"primes": (3, 5, 7)}, 12),
        ("ind2", {}, 14),
        ("rigidity", {"n_from": 2, "n_to": 300}, 299),
        ("antichain-2", {"n_max": 6}, 10),
        ("X2", {"a_max": 41}, 20),
        ("basic-closure", {"b_max": 12, "window": 200}, 45),
        ("gauss", {"limit": 1000, "p_max": 11}, 24),
        ("S5-stabilization", {"a_max": 20, "primes": (3,)}, 13),
        ("tree", {"primes": (3,), "gen_max": 30, "nmax": 3}, 2),
        ("d3-vs-d5", {}, 4),
        ("anti2", {}, 3),
        ("ord2", {"gen_max": 20}, 36),
        ("iso", {"primes": (3,), "gen_max": 20, "nmax": 3}, 17),
    ],
)
def test_suites_pass(lemma_id, params, cases):
    report = lemma_suite(lemma_id, params)
    assert report.passed, report.failures[:5]
    assert report.cases_checked == cases


def test_every_suite_is_covered():
    assert set(SUITES) == {
        "basic-closure", "gauss", "S5-stabilization", "index", "ind2", "X2", "iso",
        "ord2", "anti2", "tree", "d3-vs-d5", "antichain-2", "rigidity",
    }


def test_parallel_run_matches_serial():
    params = {"n_from": 2, "n_to": 400}
    serial = lemma_suite("rigidity", params)
    parallel = lemma_suite("rigidity", params, jobs=2)
    assert serial.cases_checked == parallel.cases_checked
    assert serial.failures == parallel.failures


def test_unknown_suite_and_parameter():
    with pytest.raises(DomainError, match="valid ids"):
        lemma_suite("nope")
    with pytest.raises(DomainError):
        lemma_suite("ind2", {"b_max": 3})


def test_report_merge_and_json():
    a = VerificationReport("x", {"k": 1}, cases_checked=2, failures=[(1, 2, 3)], elapsed=0.5)
    b = VerificationReport("x", {"k": 1}, cases_checked=3, elapsed=0.25)
    m = a.merge(b)
    assert (m.cases_checked, len(m.failures), m.passed) == (5, 1, False)
    data = json.loads(json.dumps(m.to_json()))
    assert data["cases_checked"] == 5 and data["lemma_id"] == "x"
    assert VerificationReport("y", {}).passed
