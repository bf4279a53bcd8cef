"""Naive reference implementations used as test oracles.

Nothing here imports golomb_lab: each function recomputes its answer from
definitions by enumeration.
"""
import math


def trial_factor(x):
    out = []
    d = 2
    while d * d <= x:
        e = 0
        while x % d == 0:
            x //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1
    if x > 1:
        out.append((x, 1))
    return out


def is_prime_naive(n):
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def valuation(p, x):
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def crt_scan(congruences):
    M = math.prod(m for _, m in congruences)
    hits = [x for x in range(M) if all(x % m == r for r, m in congruences)]
    assert len(hits) == 1
    return hits[0], M


def order_by_iteration(a, m):
    k, x = 1, a % m
    while x != 1 % m:
        x = x * a % m
        k += 1
    return k


def units(m):
    return {x for x in range(m) if math.gcd(x, m) == 1}


def progression_members(a, b, window):
    return {x for x in range(a, window + 1, b)}


def golomb_closure_formula(a, b, window):
    """Members of [1, window] in the intersection over p | b of pℕ ∪ (a + p^l ℤ)."""
    factors = trial_factor(b)
    return {
        x
        for x in range(1, window + 1)
        if all(x % p == 0 or (x - a) % p**l == 0 for p, l in factors)
    }


def power_classes(a, m, count=None):
    """Classes a^k mod m for k = 1 .. count (default: until they repeat)."""
    seen, x = [], a % m
    while x not in seen:
        seen.append(x)
        x = x * a % m
    return set(seen)


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]
