import pytest
from hypothesis import given
from hypothesis import strategies as st

from _brute import order_by_iteration, power_classes, units
from golomb_lab.errors import DomainError
from golomb_lab.orbit_closures import (
    TwoAdicBranch,
    closure_level,
    orbit_closure,
    predicted_special_closure,
    saturated_closure,
    two_adic_closed_form,
)
from golomb_lab.periodic_sets import Relation, relate, residue_classes

PRIMES = [2, 3, 5, 7, 11, 13]


def brute_level(a, p):
    n = 1
    while order_by_iteration(a, p**n) < max(p, 3):
        n += 1
    return n


@pytest.mark.parametrize(
    "a, p, text, level, index",
    [
        (4, 3, "1+3ℕ₀", 2, 2),
        (5, 2, "1+4ℕ₀", 4, 2),
        (3, 2, "(1+8ℕ₀)∪(3+8ℕ₀)", 4, 2),
        (7, 2, "(1+16ℕ₀)∪(7+16ℕ₀)", 5, 4),
        (17, 2, "1+16ℕ₀", 6, 8),
    ],
)
def test_closure_examples(a, p, text, level, index):
    X = orbit_closure(a, p)
    assert (str(X.set), X.level, X.index) == (text, level, index)


def test_closure_of_two_mod_three():
    # ⟨2⟩ is all of (ℤ/9)^×: the closure is every integer prime to 3
    X = orbit_closure(2, 3)
    assert X.set == residue_classes(3, [1, 2])
    assert (X.level, X.index, X.subgroup_order) == (2, 1, 6)


@pytest.mark.parametrize("a, p", [(3, 3), (1, 5), (0, 2), (4, 6)])
def test_domain_errors(a, p):
    with pytest.raises(DomainError):
        orbit_closure(a, p)


@given(st.sampled_from(PRIMES), st.integers(2, 400))
def test_level_is_minimal(p, a):
    if a % p == 0:
        a += 1
    X = orbit_closure(a, p)
    assert X.level == brute_level(a, p) == closure_level(a, p)
    assert X.subgroup_order == order_by_iteration(a, p**X.level)
    assert X.index * X.subgroup_order == len(units(p**X.level))


@given(st.sampled_from(PRIMES), st.integers(2, 400), st.integers(0, 2))
def test_closure_is_preimage_at_every_deeper_level(p, a, extra):
    if a % p == 0:
        a += 1
    X = orbit_closure(a, p)
    m = p ** (X.level + extra)
    # the closure mod p^(level+extra) is exactly the set of power classes
    image = {x for x in range(1, m + 1) if x in X.set}
    assert {x % m for x in image} == power_classes(a, m)


@given(st.sampled_from(PRIMES), st.integers(2, 400), st.integers(1, 40))
def test_powers_lie_in_closure(p, a, k):
    if a % p == 0:
        a += 1
    assert a**k in orbit_closure(a, p).set


def test_canonical_and_saturated():
    for p in (2, 3, 5, 7):
        for a in range(2, 120):
            if a % p:
                X = orbit_closure(a, p)
                assert X.set.threshold == 1 and (p**X.level) % X.set.modulus == 0
                assert X.set == saturated_closure(a, p, X.level + 1)


@pytest.mark.parametrize("a", range(3, 200, 2))
def test_two_adic_branches(a):
    X = orbit_closure(a, 2)
    assert X.two_adic_branch is (TwoAdicBranch.PLUS_ONE if a % 4 == 1 else TwoAdicBranch.MINUS_ONE)
    assert X.set == two_adic_closed_form(X.two_adic_branch, X.level)
    assert X.index == 2 ** (X.level - 3)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_special_closures_odd(p, n):
    X = predicted_special_closure(p, n)
    assert X.set == residue_classes(p**n, [1])
    assert X.index == p ** (n - 1) * (p - 1)


@pytest.mark.parametrize("n", range(2, 9))
def test_special_closures_two(n):
    plus = predicted_special_closure(2, n, 1)
    minus = predicted_special_closure(2, n, -1)
    assert plus.set == residue_classes(2**n, [1])
    assert minus.set == residue_classes(2 ** (n + 1), [1, 2**n - 1])
    assert plus.index == minus.index == 2 ** (n - 1)


def test_special_closure_domain():
    with pytest.raises(DomainError):
        predicted_special_closure(3, 2, -1)
    with pytest.raises(DomainError):
        predicted_special_closure(2, 1)


def test_odd_closures_nested_by_index():
    for p in (3, 5, 7):
        closures = {orbit_closure(a, p).set: orbit_closure(a, p) for a in range(2, 80) if a % p}
        for X in closures.values():
            for Y in closures.values():
                inside = relate(Y.set, X.set) in (Relation.EQUAL, Relation.PROPER_SUBSET)
                assert inside == (Y.index % X.index == 0)


def test_json_shape():
    data = orbit_closure(7, 2).to_json()
    assert data["branch"] == "MinusOne"
    assert data["set_text"] == "(1+16ℕ₀)∪(7+16ℕ₀)"
    assert {"p", "a", "level", "index", "subgroup_order", "set"} <= set(data)
    assert "branch" not in orbit_closure(4, 3).to_json()
