"""Exact number-theoretic primitives.

Everything works on Python ints, so moduli such as ``2**(n + 2)`` never
overflow. Primality is deterministic Miller-Rabin below 3.3e24, which covers
every input this package produces.
"""
from __future__ import annotations

import enum
import functools
import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError

TRIAL_DIVISION_LIMIT = 10**6

# First 13 primes: a deterministic witness set for n < 3317044064679887385961981.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


@functools.lru_cache(maxsize=None)
def _sieve(limit: int) -> tuple[int, ...]:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = False
    return tuple(int(p) for p in np.flatnonzero(flags))


def primes_up_to(limit: int) -> tuple[int, ...]:
    """All primes ``<= limit`` (sieve of Eratosthenes, cached)."""
    if limit < 2:
        return ()
    return _sieve(limit)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _MR_DETERMINISTIC_LIMIT:
        bases: Iterable[int] = _MR_BASES
    else:
        # Beyond the deterministic range; never reached by desk-scale inputs.
        rng = random.Random(n)
        bases = _MR_BASES + tuple(rng.randrange(2, n - 1) for _ in range(20))
    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``((p1, e1), (p2, e2), ...)`` with p1 < p2 < ..."""

    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in self.factors)

    def valuation(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def divisors(self) -> list[int]:
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return sorted(divs)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


@functools.lru_cache(maxsize=65536)
def factorize(x: int) -> Factorization:
    """Factor ``x >= 1``: trial division up to 10**6, then Pollard rho."""
    if x < 1:
        raise DomainError(f"factorize expects a positive integer, got {x}")
    found: dict[int, int] = {}
    rest = x
    limit = min(TRIAL_DIVISION_LIMIT, math.isqrt(x))
    for p in primes_up_to(limit):
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            found[p] = e
    if rest > 1:
        _split(rest, found)
    return Factorization(tuple(sorted(found.items())))


def prime_divisors(x: int) -> tuple[int, ...]:
    """The set of prime divisors of ``x`` in increasing order."""
    return factorize(x).primes


def padic_valuation(p: int, x: int) -> int:
    """Largest ``k`` with ``p**k | x``."""
    _require_prime(p)
    if x < 1:
        raise DomainError(f"valuation needs x >= 1, got {x}")
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def totient_prime_power(p: int, k: int) -> int:
    _require_prime(p)
    if k < 1:
        raise DomainError(f"exponent must be >= 1, got {k}")
    return p ** (k - 1) * (p - 1)


def crt_solve(congruences: Sequence[tuple[int, int]]) -> tuple[int, int]:
    """Solve ``x = r_i (mod m_i)`` for pairwise coprime moduli.

    Returns ``(r, M)`` with ``M`` the product of the moduli and ``0 <= r < M``.

    >>> crt_solve([(2, 3), (3, 5)])
    (8, 15)
    """
    r, M = 0, 1
    for ri, mi in congruences:
        if mi < 1 or not 0 <= ri < mi:
            raise DomainError(f"bad congruence {ri} mod {mi}")
        if math.gcd(M, mi) != 1:
            raise DomainError(f"moduli are not pairwise coprime (modulus {mi})")
        t = (ri - r) * pow(M, -1, mi) % mi
        r += M * t
        M *= mi
    return r, M


def mult_order(a: int, p: int, n: int) -> int:
    """Multiplicative order of ``a`` modulo ``p**n``.

    Starts from the group order ``p**(n-1) * (p-1)`` and strips prime factors
    while the power stays 1, so huge exponents cost only a few ``pow`` calls.
    """
    _require_prime(p)
    if n < 1:
        raise DomainError(f"exponent must be >= 1, got {n}")
    if a % p == 0:
        raise DomainError(f"{a} is not a unit modulo {p}^{n}")
    m = p**n
    order = totient_prime_power(p, n)
    for q in _group_order_primes(p, n):
        while order % q == 0 and pow(a, order // q, m) == 1:
            order //= q
    return order


def _group_order_primes(p: int, n: int) -> tuple[int, ...]:
    qs = set(prime_divisors(p - 1)) if p > 2 else set()
    if n > 1:
        qs.add(p)
    return tuple(sorted(qs))


class ShapeKind(enum.Enum):
    CYCLIC = "cyclic"
    TWO_TORSION_SPLIT = "two_torsion_split"


@dataclass(frozen=True)
class Cyclic:
    generator: int

    kind = ShapeKind.CYCLIC


@dataclass(frozen=True)
class TwoTorsionSplit:
    """``C_2 (+) C_{2^(n-2)}`` generated by -1 and 5."""

    gen_minus_one: int
    gen_five: int
    cyclic_part_order: int

    kind = ShapeKind.TWO_TORSION_SPLIT


@dataclass(frozen=True)
class UnitGroupDescriptor:
    p: int
    n: int
    order: int
    shape: Cyclic | TwoTorsionSplit

    @property
    def modulus(self) -> int:
        return self.p**self.n

    def to_json(self) -> dict:
        shape = {"kind": self.shape.kind.value}
        if isinstance(self.shape, Cyclic):
            shape["generator"] = self.shape.generator
        else:
            shape.update(
                gen_minus_one=self.shape.gen_minus_one,
                gen_five=self.shape.gen_five,
                cyclic_part_order=self.shape.cyclic_part_order,
            )
        return {"p": self.p, "n": self.n, "order": self.order, "shape": shape}


def unit_group_structure(p: int, n: int) -> UnitGroupDescriptor:
    """Structure of the unit group modulo ``p**n``.

    Odd ``p`` (and moduli 2, 4) give a cyclic group; the generator is the
    smallest candidate in 2, 3, ... whose order equals the group order. For
    ``p = 2, n >= 3`` the group splits as ``<-1> x <5>``.
    """
    _require_prime(p)
    if n < 1:
        raise DomainError(f"exponent must be >= 1, got {n}")
    m = p**n
    order = totient_prime_power(p, n)
    if p == 2 and n >= 3:
        return UnitGroupDescriptor(p, n, order, TwoTorsionSplit(m - 1, 5 % m, 2 ** (n - 2)))
    if m == 2:
        return UnitGroupDescriptor(p, n, order, Cyclic(1))
    g = 2
    while g % p == 0 or mult_order(g, p, n) != order:
        g += 1
    return UnitGroupDescriptor(p, n, order, Cyclic(g))
