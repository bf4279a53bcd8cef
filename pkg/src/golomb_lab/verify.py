"""Brute-force oracles and lemma-indexed verification sweeps.

The oracles deliberately take a different route from the library code they
check: the Golomb closure oracle works from neighbourhoods ``x + b·ℕ₀``
rather than the closed formula, and the p-adic orbit oracle enumerates powers
at a deeper level than the one the closure was computed at.
"""
from __future__ import annotations

import functools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from . import nt_core
from .errors import ConsistencyError, DomainError, GolombLabError
from .orbit_closures import (
    TwoAdicBranch,
    orbit_closure,
    predicted_special_closure,
    two_adic_closed_form,
)
from .periodic_sets import (
    PeriodicSet,
    difference,
    from_progression,
    golomb_closure,
    intersect,
    is_subset,
    meets_progression,
    naturals,
    residue_classes,
)
from .posets import (
    _index_criterion,
    _reverse_inclusion,
    build_xp,
    dp_elements,
    minimal_elements,
    smallest_upchain_downset_size,
    upchain_elements,
    xp_nodes,
)


@dataclass
class VerificationReport:
    lemma_id: str
    parameters: dict
    cases_checked: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    observations: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: VerificationReport) -> VerificationReport:
        out = VerificationReport(
            self.lemma_id,
            self.parameters,
            self.cases_checked + other.cases_checked,
            self.failures + other.failures,
            self.elapsed + other.elapsed,
            dict(self.observations),
        )
        _absorb(out.observations, other.observations)
        return out

    def to_json(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "parameters": {k: _jsonable(v) for k, v in sorted(self.parameters.items())},
            "cases_checked": self.cases_checked,
            "failures": [
                {"input": _jsonable(i), "expected": _jsonable(e), "got": _jsonable(g)}
                for i, e, g in self.failures
            ],
            "elapsed": round(self.elapsed, 6),
            "passed": self.passed,
            "observations": _jsonable(self.observations),
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.lemma_id}: {self.cases_checked} cases, "
            f"{len(self.failures)} failures, {self.elapsed:.2f}s"
        )


def _absorb(dst: dict, src: dict) -> None:
    for k, v in src.items():
        if isinstance(v, dict):
            dst.setdefault(k, {}).update(v)
        elif isinstance(v, (int, float)) and k in dst:
            dst[k] += v
        else:
            dst.setdefault(k, v)


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    return str(v)


# -- Golomb closure oracle ----------------------------------------------------


@functools.lru_cache(maxsize=8)
def _coprime_table(window: int, bound: int) -> np.ndarray:
    xs = np.arange(1, window + 1, dtype=np.int64)
    bs = np.arange(1, bound + 1, dtype=np.int64)
    return np.gcd.outer(xs, bs) == 1


@functools.lru_cache(maxsize=256)
def _first_coprime_by_gcd(modulus: int, bound: int, window: int) -> dict[int, np.ndarray]:
    """For each ``g | modulus``: the least ``b <= bound`` with ``gcd(b, modulus) = g``
    and ``gcd(b, x) = 1``, per ``x`` in the window (0 when there is none)."""
    table = _coprime_table(window, bound)
    bs = np.arange(1, bound + 1, dtype=np.int64)
    gs = np.gcd(bs, modulus)
    out = {}
    for g in np.unique(gs):
        cols = np.flatnonzero(gs == g)
        sub = table[:, cols]
        hit = sub.any(axis=1)
        first = bs[cols][sub.argmax(axis=1)]
        out[int(g)] = np.where(hit, first, 0)
    return out


def _tail_hits(S: PeriodicSet, g: int, window: int) -> np.ndarray:
    """``x`` in the window whose class mod ``g`` meets a tail class of ``S``."""
    hit_classes = np.zeros(g, dtype=bool)
    hit_classes[np.unique(S.residues % g).astype(np.int64)] = True
    xs = np.arange(1, window + 1, dtype=np.int64)
    return hit_classes[xs % g]


def closure_exclusion_moduli(S: PeriodicSet, modulus_bound: int, window: int) -> np.ndarray:
    """Least ``b`` that excludes each ``x`` from the closure of ``S``.

    Entry ``x - 1`` is the smallest ``b <= modulus_bound`` with
    ``gcd(b, x) = 1`` and ``(x + b·ℕ₀) ∩ S = ∅``, or 0 if there is none. So
    the oracle at any bound ``B' <= modulus_bound`` is ``{x : e == 0 or e > B'}``.

    ``(x + bℕ₀)`` meets the periodic tail of ``S`` iff some residue ``r`` of
    ``S`` has ``r ≡ x (mod gcd(b, M))``, and meets an exception ``e`` iff
    ``e >= x`` and ``b | e - x``. This is the same answer as
    :func:`periodic_sets.meets_progression`, tabulated.
    """
    if modulus_bound < 1 or window < 1:
        raise DomainError("modulus_bound and window must be positive")
    M = S.modulus
    if not S.exceptions:
        firsts = _first_coprime_by_gcd(M, modulus_bound, window)
        kill = np.zeros(window, dtype=np.int64)
        for g, first in firsts.items():
            miss = ~_tail_hits(S, g, window) & (first > 0)
            better = miss & ((kill == 0) | (first < kill))
            kill[better] = first[better]
        return kill

    table = _coprime_table(window, modulus_bound)
    xs = np.arange(1, window + 1, dtype=np.int64)
    exc = np.asarray(S.exceptions, dtype=np.int64)
    tails = {}
    kill = np.zeros(window, dtype=np.int64)
    for b in range(1, modulus_bound + 1):
        g = math.gcd(b, M)
        if g not in tails:
            tails[g] = _tail_hits(S, g, window)
        diff = exc[None, :] - xs[:, None]
        exc_hit = ((diff >= 0) & (diff % b == 0)).any(axis=1)
        killed = table[:, b - 1] & ~tails[g] & ~exc_hit & (kill == 0)
        kill[killed] = b
    return kill


def golomb_closure_oracle(S: PeriodicSet, modulus_bound: int, window: int) -> frozenset[int]:
    """Members of ``[1, window]`` all of whose neighbourhoods ``x + b·ℕ₀`` with
    ``b <= modulus_bound``, ``gcd(b, x) = 1`` meet ``S``.

    Over-approximates the closure; shrinks as the bound grows.
    """
    kill = closure_exclusion_moduli(S, modulus_bound, window)
    return frozenset(int(x) for x in np.flatnonzero(kill == 0) + 1)


def golomb_closure_oracle_slow(S: PeriodicSet, modulus_bound: int, window: int) -> frozenset[int]:
    """Same oracle with one exact periodic-set intersection per neighbourhood."""
    out = set()
    for x in range(1, window + 1):
        if all(
            meets_progression(S, x, b)
            for b in range(1, modulus_bound + 1)
            if math.gcd(b, x) == 1
        ):
            out.add(x)
    return frozenset(out)


def radical(n: int) -> int:
    return math.prod(nt_core.prime_divisors(n)) if n > 1 else 1


def full_oracle_bound(b: int) -> int:
    """``b · rad(b)``: the bound at which the oracle is compared for equality."""
    return b * radical(b)


# -- p-adic orbit oracle ------------------------------------------------------


def padic_orbit_oracle(a: int, p: int, depth: int) -> PeriodicSet:
    """Union of the classes ``a^k mod p^depth``, ``k >= 1``."""
    if not nt_core.is_prime(p):
        raise DomainError(f"{p} is not prime")
    if a % p == 0:
        raise DomainError(f"{p} divides {a}")
    if depth < 1:
        raise DomainError("depth must be >= 1")
    m = p**depth
    seen = []
    x = a % m
    start = x
    while True:
        seen.append(x)
        x = x * a % m
        if x == start:
            break
    return residue_classes(m, seen)


# -- the inductive reconstruction --------------------------------------------


def reconstruct_n(n: int) -> int:
    """Recover ``n >= 2`` from the sets ``(1 + p^α ℕ₀) \\ (1 + p^(α+1) ℕ₀)``.

    ``α = v_p(n - 1)``. For primes dividing ``n - 1`` the condition is a
    periodic set; for all other primes it says ``p ∤ x - 1``, which is
    checked exactly on the candidates through their valuations.
    """
    if n < 2:
        raise DomainError("reconstruction starts at n = 2")
    fac = nt_core.factorize(n - 1)
    S = naturals()
    for p, alpha in fac:
        S = intersect(S, difference(from_progression(1, p**alpha), from_progression(1, p ** (alpha + 1))))
    window = 2 * math.prod(p ** (alpha + 1) for p, alpha in fac)
    xs = S.members_upto(window).astype(np.int64)
    rest = xs - 1
    ok = rest >= 1
    for p, alpha in fac:
        val = np.zeros_like(rest)
        divisible = ok & (rest % p == 0)
        while divisible.any():
            rest = np.where(divisible, rest // p, rest)
            val += divisible
            divisible = ok & (rest % p == 0)
        ok &= val == alpha
    # no prime outside Π_{n-1} may divide x - 1
    ok &= rest == 1
    survivors = [int(x) for x in xs[ok]]
    if survivors != [n]:
        raise ConsistencyError(f"reconstruction of {n} left {survivors}")
    x = survivors[0]
    if math.prod(p ** nt_core.padic_valuation(p, x - 1) for p, _ in fac) != x - 1:
        raise ConsistencyError(f"survivor {x} has x - 1 with foreign prime factors")
    return x


def unique_prime_predecessor_check(bound: int) -> VerificationReport:
    """Among odd primes ``p <= bound``, ``p - 1`` is prime only for ``p = 3``."""
    if bound < 5:
        raise DomainError("bound must be >= 5")
    t0 = time.perf_counter()
    primes = nt_core.primes_up_to(bound)
    prime_set = set(primes)
    report = VerificationReport("unique-prime-predecessor", {"bound": bound})
    for p in primes[1:]:
        report.cases_checked += 1
        if ((p - 1) in prime_set) != (p == 3):
            report.failures.append((p, p == 3, (p - 1) in prime_set))
    report.elapsed = time.perf_counter() - t0
    return report


# -- unit group enumeration ---------------------------------------------------


def _powers(g: int, m: int, count: int) -> np.ndarray:
    """``g^0, ..., g^(count-1)`` mod ``m`` by block doubling (needs m < 3e9)."""
    out = np.empty(count, dtype=np.int64)
    out[0] = 1 % m
    filled = 1
    while filled < count:
        k = min(filled, count - filled)
        out[filled : filled + k] = out[:k] * pow(g, filled, m) % m
        filled += k
    return out


def check_unit_group(p: int, n: int) -> list:
    """Compare the descriptor for ``p^n`` against an exhaustive unit enumeration."""
    D = nt_core.unit_group_structure(p, n)
    m = p**n
    phi = nt_core.totient_prime_power(p, n)
    failures = []
    if D.order != phi:
        failures.append(((p, n), phi, D.order))
    split = p == 2 and n >= 3
    if isinstance(D.shape, nt_core.TwoTorsionSplit) != split:
        failures.append(((p, n), "split" if split else "cyclic", D.shape.kind.value))
        return failures
    if split:
        S = D.shape
        if S.cyclic_part_order != 2 ** (n - 2) or nt_core.mult_order(S.gen_five, 2, n) != 2 ** (n - 2):
            failures.append(((p, n), 2 ** (n - 2), S.cyclic_part_order))
        fives = _powers(S.gen_five, m, 2 ** (n - 2))
        elems = np.concatenate([fives, (S.gen_minus_one * fives) % m])
    else:
        elems = _powers(D.shape.generator, m, phi)
    units = np.unique(elems)
    if units.size != phi or elems.size != phi or (units % p == 0).any():
        failures.append(((p, n), f"{phi} distinct units", f"{units.size} distinct"))
    return failures


# -- lemma suites -------------------------------------------------------------


@dataclass(frozen=True)
class Suite:
    cases: Callable[[dict], list]
    check: Callable[[Any, dict], tuple[list, dict]]
    defaults: dict


def _gen_pairs_closure(params):
    b_max = params["b_max"]
    return [(a, b) for b in range(2, b_max + 1) for a in range(1, b) if math.gcd(a, b) == 1]


def _check_closure(case, params):
    a, b = case
    window = params["window"]
    C = golomb_closure(a, b)
    S = from_progression(a, b)
    fails = []
    if not is_subset(S, C):
        fails.append((case, "closure contains the progression", str(C)))
    bound = full_oracle_bound(b)
    kill = closure_exclusion_moduli(S, bound, window)
    xs = np.arange(1, window + 1, dtype=np.int64)
    inside = C.contains_array(xs)
    too_small = inside & (kill > 0)
    too_big = ~inside & (kill == 0)
    for x in xs[too_small][:5]:
        fails.append(((a, b, int(x)), "in oracle at every bound", f"excluded at b={int(kill[x - 1])}"))
    for x in xs[too_big][:5]:
        fails.append(((a, b, int(x)), f"excluded by bound {bound}", "kept"))
    empirical = int(kill.max()) if (kill > 0).any() else 1
    return fails, {"equality_bound": {f"{a},{b}": empirical}}


def _gen_gauss(params):
    out = []
    for p in nt_core.primes_up_to(params["p_max"]):
        n = 1
        while p**n <= params["limit"]:
            out.append((p, n))
            n += 1
    return out


def _check_gauss(case, params):
    return check_unit_group(*case), {}


def _gen_orbits(params):
    return [(a, p) for p in params["primes"] for a in range(2, params["a_max"] + 1) if a % p]


def _check_stabilization(case, params):
    a, p = case
    X = orbit_closure(a, p)
    fails = []
    for depth in range(X.level, X.level + params["extra_levels"] + 1):
        got = padic_orbit_oracle(a, p, depth)
        if got != X.set:
            fails.append(((a, p, depth), str(X.set), str(got)))
    for k in range(1, 51):
        if pow(a, k) not in X.set:
            fails.append(((a, p, k), "a^k in closure", "missing"))
            break
    return fails, {}


def _gen_index(params):
    return [(p, n) for p in params["primes"] for n in range(params["n_min"], params["n_max"] + 1)]


def _check_index(case, params):
    p, n = case
    try:
        X = predicted_special_closure(p, n, 1)
    except ConsistencyError as exc:
        return [(case, "closed form", str(exc))], {}
    expected = (residue_classes(p**n, [1]), p ** (n - 1) * (p - 1))
    if (X.set, X.index) != expected:
        return [(case, (str(expected[0]), expected[1]), (str(X.set), X.index))], {}
    return [], {}


def _gen_ind2(params):
    return [(n, s) for n in range(params["n_min"], params["n_max"] + 1) for s in (1, -1)]


def _check_ind2(case, params):
    n, sign = case
    try:
        X = predicted_special_closure(2, n, sign)
    except ConsistencyError as exc:
        return [(case, "closed form", str(exc))], {}
    if sign == 1:
        expected_set = residue_classes(2**n, [1])
    else:
        expected_set = residue_classes(2 ** (n + 1), [1, 2**n - 1])
    if X.set != expected_set or X.index != 2 ** (n - 1) or X.level != n + 2:
        return [(case, (str(expected_set), 2 ** (n - 1)), (str(X.set), X.index))], {}
    return [], {}


def _gen_x2(params):
    return list(range(3, params["a_max"] + 1, 2))


def _check_x2(a, params):
    X = orbit_closure(a, 2)
    fails = []
    branch = TwoAdicBranch.PLUS_ONE if a % 4 == 1 else TwoAdicBranch.MINUS_ONE
    if X.two_adic_branch is not branch:
        fails.append((a, branch.value, X.two_adic_branch.value))
    predicted = two_adic_closed_form(branch, X.level)
    if X.set != predicted:
        fails.append((a, str(predicted), str(X.set)))
    if X.index != 2 ** (X.level - 3):
        fails.append((a, 2 ** (X.level - 3), X.index))
    return fails, {}


@functools.lru_cache(maxsize=32)
def _cached_nodes(p: int, gen_max: int):
    return xp_nodes(p, gen_max)


def _gen_order_pairs(params):
    out = []
    for p in params["primes"]:
        n = len(_cached_nodes(p, params["gen_max"]))
        out += [(p, i, j) for i in range(n) for j in range(n)]
    return out


def _check_order_pair(case, params):
    p, i, j = case
    nodes = _cached_nodes(p, params["gen_max"])
    X, Y = nodes[i].payload, nodes[j].payload
    by_sets, by_index = _reverse_inclusion(X, Y), _index_criterion(X, Y)
    if by_sets != by_index:
        return [((p, X.a, Y.a), by_sets, by_index)], {}
    return [], {}


def _check_iso_prime(case, params):
    # whole-poset isomorphism X_p -> D_p through the index
    from .posets import index_map_is_isomorphism

    p = case
    P = build_xp(p, params["gen_max"])
    D = dp_elements(p, params["nmax"])
    if not index_map_is_isomorphism(P, D):
        return [(p, "index map is an order embedding", "not")], {}
    return [], {}


def _gen_iso(params):
    return [("pair", c) for c in _gen_order_pairs(params)] + [("iso", p) for p in params["primes"]]


def _check_iso(case, params):
    kind, c = case
    return _check_order_pair(c, params) if kind == "pair" else _check_iso_prime(c, params)


def _anti2_expected(gen_max: int):
    nodes, edges = set(), set()
    n = 2
    while 2**n - 1 <= gen_max:
        for a in (2**n - 1, 2**n + 1):
            if a <= gen_max:
                nodes.add(a)
        top = 2 ** (n + 1) + 1
        if top <= gen_max:
            edges |= {(2**n - 1, top), (2**n + 1, top)}
        n += 1
    return nodes, edges


def _check_anti2(case, params):
    gen_max = params["gen_max"]
    P = build_xp(2, gen_max)
    gens = [n.payload.a for n in P.nodes]
    fails = []
    eight = residue_classes(8, [1])
    minimal = {n.payload.a for n in minimal_elements(P)}
    predicted_min = {n.payload.a for n in P.nodes if not is_subset(n.payload.set, eight)}
    if case == "minimal":
        if minimal != predicted_min:
            fails.append((case, sorted(predicted_min), sorted(minimal)))
    elif case == "chain":
        rest = [k for k, n in enumerate(P.nodes) if n.payload.a not in minimal]
        forms = {n.payload.set for k, n in enumerate(P.nodes) if k in rest}
        chain_forms = {residue_classes(2**m, [1]) for m in range(3, 2 + gen_max.bit_length() + 1)}
        linear = all(P.leq(i, j) or P.leq(j, i) for i in rest for j in rest)
        if not linear or not forms <= chain_forms:
            fails.append((case, "chain of 1+2^nℕ₀", sorted(str(f) for f in forms)))
    elif case == "hasse":
        nodes, edges = _anti2_expected(gen_max)
        got = {(P.nodes[i].payload.a, P.nodes[j].payload.a) for i, j in P.hasse_edges}
        if set(gens) != nodes or got != edges:
            fails.append((case, (sorted(nodes), sorted(edges)), (sorted(gens), sorted(got))))
    return fails, {}


def _gen_tree(params):
    return [("dp", p) for p in params["primes"]] + [("xp", p) for p in params["primes"]]


def _check_tree(case, params):
    kind, p = case
    fails = []
    if kind == "dp":
        nmax = params["nmax"]
        got = sorted(n.payload for n in upchain_elements(dp_elements(p, nmax)))
        expected = [p**k * (p - 1) for k in range(nmax + 1)]
        if got != expected:
            fails.append((case, expected, got))
        return fails, {}
    P = build_xp(p, params["gen_max"])
    by_index = {n.payload.index: k for k, n in enumerate(P.nodes)}
    ups = {n.payload.a for n in upchain_elements(P)}
    skipped = 0
    for node in P.nodes:
        X = node.payload
        is_progression = X.set.threshold == 1 and [int(r) for r in X.set.residues] == [1]
        if not is_progression:
            # index p^k e with e | p-1, e != p-1: ↑X holds the incomparable p^(k+1) e and p^k (p-1)
            k = nt_core.padic_valuation(p, X.index)
            witnesses = (X.index * p, p**k * (p - 1))
            if not all(w in by_index for w in witnesses):
                skipped += 1
                continue
        if (X.a in ups) != is_progression:
            fails.append(((p, X.a), is_progression, X.a in ups))
    return fails, {"boundary_skipped": skipped}


D3_FIGURE_EDGES = {(1, 3), (3, 9), (9, 27), (1, 2), (3, 6), (9, 18), (2, 6), (6, 18)}
D5_FIGURE_EDGES = {
    (1, 5), (1, 2), (5, 25), (5, 10), (2, 10), (2, 4),
    (25, 125), (25, 50), (10, 50), (10, 20), (4, 20),
}


def _edge_values(P):
    return {(P.nodes[i].payload, P.nodes[j].payload) for i, j in P.hasse_edges}


def _check_d3_d5(case, params):
    fails = []
    if case == "figures":
        for p, nmax, nodes, bold in ((3, 2, {1, 2, 3, 6, 9, 18}, {2, 6, 18}), (5, 1, {1, 2, 4, 5, 10, 20}, {4, 20})):
            P = dp_elements(p, nmax)
            got_nodes = {n.payload for n in P.nodes}
            got_bold = {n.payload for n in upchain_elements(P)}
            if got_nodes != nodes or got_bold != bold:
                fails.append(((p, nmax), (sorted(nodes), sorted(bold)), (sorted(got_nodes), sorted(got_bold))))
        for p, drawn in ((3, D3_FIGURE_EDGES), (5, D5_FIGURE_EDGES)):
            covers = _edge_values(dp_elements(p, 3))
            if not drawn <= covers:
                fails.append((p, sorted(drawn), sorted(covers & drawn)))
        return fails, {}
    k = case
    s3, s5 = smallest_upchain_downset_size(3, k), smallest_upchain_downset_size(5, k)
    if (s3, s5) != (2, 3):
        fails.append((k, (2, 3), (s3, s5)))
    return fails, {}


def _gen_d3_d5(params):
    return ["figures"] + list(range(params["depth_min"], params["depth_max"] + 1))


def _gen_antichain(params):
    ns = range(params["n_min"], params["n_max"] + 1)
    return [(m, n) for m in ns for n in ns if m < n]


def _check_antichain(case, params):
    m, n = case
    X, Y = orbit_closure(2**m - 1, 2), orbit_closure(2**n - 1, 2)
    xy, yx = _reverse_inclusion(X, Y), _reverse_inclusion(Y, X)
    if xy or yx or _index_criterion(X, Y) or _index_criterion(Y, X):
        return [(case, "incomparable", (xy, yx))], {}
    return [], {}


def _gen_rigidity(params):
    return list(range(params["n_from"], params["n_to"] + 1))


def _check_rigidity(n, params):
    try:
        got = reconstruct_n(n)
    except ConsistencyError as exc:
        return [(n, n, str(exc))], {}
    return ([] if got == n else [(n, n, got)]), {}


SUITES: dict[str, Suite] = {
    "basic-closure": Suite(_gen_pairs_closure, _check_closure, {"b_max": 60, "window": 1000}),
    "gauss": Suite(_gen_gauss, _check_gauss, {"limit": 10**6, "p_max": 97}),
    "S5-stabilization": Suite(
        _gen_orbits, _check_stabilization, {"a_max": 200, "primes": (2, 3, 5, 7, 11), "extra_levels": 2}
    ),
    "index": Suite(_gen_index, _check_index, {"primes": (3, 5, 7, 11), "n_min": 1, "n_max": 4}),
    "ind2": Suite(_gen_ind2, _check_ind2, {"n_min": 2, "n_max": 8}),
    "X2": Suite(_gen_x2, _check_x2, {"a_max": 401}),
    "iso": Suite(_gen_iso, _check_iso, {"primes": (3, 5, 7), "gen_max": 80, "nmax": 4}),
    "ord2": Suite(_gen_order_pairs, _check_order_pair, {"primes": (2,), "gen_max": 80}),
    "anti2": Suite(lambda params: ["minimal", "chain", "hasse"], _check_anti2, {"gen_max": 33}),
    "tree": Suite(_gen_tree, _check_tree, {"primes": (3, 5, 7), "gen_max": 80, "nmax": 4}),
    "d3-vs-d5": Suite(_gen_d3_d5, _check_d3_d5, {"depth_min": 1, "depth_max": 3}),
    "antichain-2": Suite(_gen_antichain, _check_antichain, {"n_min": 2, "n_max": 10}),
    "rigidity": Suite(_gen_rigidity, _check_rigidity, {"n_from": 2, "n_to": 10**4}),
}


def _run_chunk(lemma_id: str, params: dict, cases: list) -> VerificationReport:
    suite = SUITES[lemma_id]
    t0 = time.perf_counter()
    report = VerificationReport(lemma_id, params)
    for case in cases:
        report.cases_checked += 1
        try:
            fails, obs = suite.check(case, params)
        except GolombLabError as exc:
            fails, obs = [(case, "no error", f"{type(exc).__name__}: {exc}")], {}
        report.failures.extend(fails)
        _absorb(report.observations, obs)
    report.elapsed = time.perf_counter() - t0
    return report


def lemma_suite(lemma_id: str, params: dict | None = None, jobs: int = 1) -> VerificationReport:
    """Run one verification sweep; ``params`` override the suite defaults.

    With ``jobs > 1`` the cases are split across worker processes and the
    partial reports merged.
    """
    if lemma_id not in SUITES:
        raise DomainError(f"unknown lemma id {lemma_id!r}; valid ids: {', '.join(SUITES)}")
    suite = SUITES[lemma_id]
    params = dict(params or {})
    unknown = set(params) - set(suite.defaults)
    if unknown:
        raise DomainError(
            f"suite {lemma_id!r} does not take {sorted(unknown)}; accepted: {sorted(suite.defaults)}"
        )
    merged = {**suite.defaults, **params}
    t0 = time.perf_counter()
    cases = suite.cases(merged)
    if jobs <= 1 or len(cases) < 2:
        report = _run_chunk(lemma_id, merged, cases)
    else:
        chunks = [cases[k::jobs] for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_chunk, [lemma_id] * jobs, [merged] * jobs, chunks))
        report = parts[0]
        for part in parts[1:]:
            report = report.merge(part)
    report.elapsed = time.perf_counter() - t0
    return report
