"""Acceptance criteria, each run at full scale under its time limit.

Every test records one PASS/FAIL line; the lines are printed in the
"acceptance criteria" section of the pytest terminal summary.
"""
import time

import pytest

from golomb_lab.orbit_closures import orbit_closure
from golomb_lab.periodic_sets import is_subset, residue_classes
from golomb_lab.posets import build_xp, dp_elements, is_antichain, minimal_elements, upchain_elements
from golomb_lab.verify import lemma_suite, unique_prime_predecessor_check


class Criterion:
    """Times a block, then logs and asserts the outcome."""

    def __init__(self, log, number, title, limit):
        self.log, self.number, self.title, self.limit = log, number, title, limit
        self.reports = []
        self.checks = []

    def run(self, lemma_id, params=None):
        report = lemma_suite(lemma_id, params)
        self.reports.append(report)
        return report

    def check(self, ok, what):
        self.checks.append((bool(ok), what))

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        cases = sum(r.cases_checked for r in self.reports)
        failures = [f for r in self.reports for f in r.failures]
        broken = [what for ok, what in self.checks if not ok]
        ok = exc_type is None and not failures and not broken and elapsed < self.limit
        detail = f"{cases} cases, {len(failures)} failures" if self.reports else f"{len(self.checks)} checks"
        if broken:
            detail += f"; failed: {', '.join(broken)}"
        if exc_type is not None:
            detail += f"; raised {exc_type.__name__}: {exc}"
        self.log.append(
            f"[{'PASS' if ok else 'FAIL'}] {self.number:>2}. {self.title}: {detail}, "
            f"{elapsed:.2f}s (limit {self.limit:g}s)"
        )
        if exc_type is None:
            assert not failures, failures[:5]
            assert not broken, broken
            assert elapsed < self.limit, f"took {elapsed:.2f}s, limit {self.limit}s"


@pytest.fixture
def criterion(acceptance_log):
    return lambda number, title, limit: Criterion(acceptance_log, number, title, limit)


def test_01_closure_formula(criterion):
    with criterion(1, "Golomb closure formula vs neighbourhood oracle, a < b <= 60", 30) as c:
        report = c.run("basic-closure", {"b_max": 60, "window": 1000})
        c.check(report.cases_checked == 1101, "1101 coprime pairs")


def test_02_unit_groups(criterion):
    with criterion(2, "unit group descriptors vs enumeration, p^n <= 10^6, p <= 97", 20) as c:
        report = c.run("gauss", {"limit": 10**6, "p_max": 97})
        c.check(report.cases_checked == 118, "118 prime powers")


def test_03_index_odd(criterion):
    with criterion(3, "closure of 1+p^n is 1+p^nN0 with index p^(n-1)(p-1)", 5) as c:
        report = c.run("index", {"primes": (3, 5, 7, 11), "n_min": 1, "n_max": 4})
        c.check(report.cases_checked == 16, "16 cases")


def test_04_index_two(criterion):
    with criterion(4, "closures of 2^n +- 1 in the 2-adic topology, n in 2..8", 5) as c:
        report = c.run("ind2", {"n_min": 2, "n_max": 8})
        c.check(report.cases_checked == 14, "14 cases")


def test_05_two_adic_branches(criterion):
    with criterion(5, "2-adic branch formulas and i(X) = 2^(n(X)-3), odd a in [3, 401]", 10) as c:
        report = c.run("X2", {"a_max": 401})
        c.check(report.cases_checked == 200, "200 generators")


def test_06_order_criteria(criterion):
    with criterion(6, "inclusion order equals index order on build_xp(p, 80), p in {2,3,5,7}", 30) as c:
        c.run("ord2", {"primes": (2,), "gen_max": 80})
        c.run("iso", {"primes": (3, 5, 7), "gen_max": 80, "nmax": 4})


def test_07_two_adic_figure(criterion):
    with criterion(7, "minimal elements, chain and Hasse diagram of build_xp(2, 33)", 5) as c:
        c.run("anti2", {"gen_max": 33})
        P = build_xp(2, 33)
        eight = residue_classes(8, [1])
        gens = sorted(n.payload.a for n in P.nodes)
        minimal = sorted(n.payload.a for n in minimal_elements(P))
        c.check(gens == [3, 5, 7, 9, 15, 17, 31, 33], "node set")
        c.check(minimal == sorted(n.payload.a for n in P.nodes if not is_subset(n.payload.set, eight)),
                "minimal = not inside 1+8N0")
        chain = sorted((n.payload for n in P.nodes if n.payload.a not in minimal), key=lambda X: X.index)
        c.check([str(X.set) for X in chain] == ["1+8ℕ₀", "1+16ℕ₀", "1+32ℕ₀"], "chain 1+8N0 > 1+16N0 > 1+32N0")
        edges = {(P.nodes[i].payload.a, P.nodes[j].payload.a) for i, j in P.hasse_edges}
        c.check(edges == {(3, 9), (5, 9), (7, 17), (9, 17), (15, 33), (17, 33)}, "Hasse edges")


def test_08_divisor_figures(criterion):
    with criterion(8, "D_3 and D_5 diagrams, bold elements, non-isomorphism at depth 1..3", 2) as c:
        c.run("d3-vs-d5", {"depth_min": 1, "depth_max": 3})
        c.check(sorted(n.payload for n in upchain_elements(dp_elements(3, 2))) == [2, 6, 18], "bold D_3")
        c.check(sorted(n.payload for n in upchain_elements(dp_elements(5, 1))) == [4, 20], "bold D_5")


def test_09_antichain(criterion):
    with criterion(9, "closures of 2^n - 1, n in 2..10, are pairwise incomparable", 2) as c:
        c.run("antichain-2", {"n_min": 2, "n_max": 10})
        c.check(is_antichain([orbit_closure(2**n - 1, 2) for n in range(2, 11)]), "antichain")


def test_10_rigidity(criterion):
    with criterion(10, "reconstruct_n(n) = n uniquely for n in [2, 10^4]", 60) as c:
        report = c.run("rigidity", {"n_from": 2, "n_to": 10**4})
        c.check(report.cases_checked == 9999, "9999 cases")


def test_11_orbit_oracle(criterion):
    with criterion(11, "p-adic oracle = orbit_closure, a <= 200, p in {2,3,5,7,11}, 3 depths", 60) as c:
        c.run("S5-stabilization", {"a_max": 200, "primes": (2, 3, 5, 7, 11), "extra_levels": 2})


def test_12_prime_predecessor(criterion):
    with criterion(12, "p - 1 prime only for p = 3 among odd primes <= 10^6", 5) as c:
        c.reports.append(unique_prime_predecessor_check(10**6))
