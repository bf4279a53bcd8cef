"""p-adic closures of the multiplicative orbits ``{a, a^2, a^3, ...}``.

The closure is the preimage, under reduction mod ``p**level``, of the cyclic
subgroup generated by ``a``. ``level`` is the first exponent at which that
subgroup has at least ``max(p, 3)`` elements; from there on the preimage no
longer changes when the level is raised.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from . import nt_core
from .errors import ConsistencyError, DomainError
from .periodic_sets import PeriodicSet, canonicalize, residue_classes

LEVEL_CAP = 64


class TwoAdicBranch(enum.Enum):
    PLUS_ONE = "PlusOne"    # a = 1 mod 4
    MINUS_ONE = "MinusOne"  # a = 3 mod 4


@dataclass(frozen=True)
class OrbitClosure:
    p: int
    a: int
    set: PeriodicSet
    level: int
    index: int
    subgroup_order: int
    two_adic_branch: Optional[TwoAdicBranch] = None

    def to_json(self) -> dict:
        out = {
            "p": self.p,
            "a": self.a,
            "level": self.level,
            "index": self.index,
            "subgroup_order": self.subgroup_order,
            "set": self.set.to_json(),
            "set_text": str(self.set),
        }
        if self.two_adic_branch is not None:
            out["branch"] = self.two_adic_branch.value
        return out


def order_floor(p: int) -> int:
    """Minimal subgroup size ``max(p, 3)`` at which orbit closures stabilize."""
    return max(p, 3)


def cyclic_subgroup(a: int, m: int) -> list[int]:
    """Elements of the subgroup generated by ``a`` mod ``m``, by repeated multiplication."""
    out = [1]
    x = a % m
    while x != 1:
        out.append(x)
        x = x * a % m
    return out


def two_adic_branch(a: int) -> TwoAdicBranch:
    if a % 2 == 0 or a < 3:
        raise DomainError(f"two_adic_branch needs an odd a >= 3, got {a}")
    return TwoAdicBranch.PLUS_ONE if a % 4 == 1 else TwoAdicBranch.MINUS_ONE


def closure_level(a: int, p: int) -> int:
    """Smallest ``n`` with ``ord(a mod p^n) >= max(p, 3)``."""
    floor = order_floor(p)
    for n in range(1, LEVEL_CAP + 1):
        if nt_core.mult_order(a, p, n) >= floor:
            return n
    raise ConsistencyError(f"level search for a={a}, p={p} hit the cap {LEVEL_CAP}")


def _check_domain(a: int, p: int) -> None:
    if not nt_core.is_prime(p):
        raise DomainError(f"{p} is not prime")
    if a == 1:
        raise DomainError("a = 1 has a trivial orbit and is excluded")
    if a < 1:
        raise DomainError(f"a must be a positive integer, got {a}")
    if a % p == 0:
        raise DomainError(f"{p} divides {a}")


def orbit_closure(a: int, p: int) -> OrbitClosure:
    """Exact p-adic closure of the powers of ``a``.

    >>> X = orbit_closure(3, 2)
    >>> str(X.set), X.level, X.index
    ('(1+8ℕ₀)∪(3+8ℕ₀)', 4, 2)
    """
    _check_domain(a, p)
    level = closure_level(a, p)
    m = p**level
    subgroup = cyclic_subgroup(a, m)
    closure = residue_classes(m, subgroup)
    phi = nt_core.totient_prime_power(p, level)
    out = OrbitClosure(
        p=p,
        a=a,
        set=closure,
        level=level,
        index=phi // len(subgroup),
        subgroup_order=len(subgroup),
        two_adic_branch=two_adic_branch(a) if p == 2 else None,
    )
    _check_level_definition(out)
    return out


def image_mod(S: PeriodicSet, m: int) -> set[int]:
    """Residues mod ``m`` hit by a threshold-1 set."""
    lift = max(S.modulus, m)
    return {int(x) % m for x in S.members_upto(lift)}


def _check_level_definition(X: OrbitClosure) -> None:
    # level must satisfy both defining conditions and be minimal among them.
    p, n = X.p, X.level
    floor = order_floor(p)
    if (p**n) % X.set.modulus or X.set.threshold != 1:
        raise ConsistencyError(f"{X.set!r} is not saturated mod {p}^{n}")
    if len(image_mod(X.set, p**n)) != X.subgroup_order or X.subgroup_order < floor:
        raise ConsistencyError(f"image of the closure of {X.a} mod {p}^{n} is too small")
    if X.index * X.subgroup_order != nt_core.totient_prime_power(p, n):
        raise ConsistencyError("index * subgroup order != group order")
    if n > 1 and len(image_mod(X.set, p ** (n - 1))) >= floor:
        raise ConsistencyError(f"level {n} for a={X.a}, p={p} is not minimal")


def two_adic_closed_form(branch: TwoAdicBranch, level: int) -> PeriodicSet:
    """The 2-adic orbit closure predicted from its branch and level.

    PlusOne: ``1 + 2^(level-2)ℕ₀``. MinusOne: ``(1 + 2^(level-1)ℕ₀) ∪
    (2^(level-2) - 1 + 2^(level-1)ℕ₀)``.
    """
    if level < 4:
        raise DomainError(f"2-adic closures have level >= 4, got {level}")
    if branch is TwoAdicBranch.PLUS_ONE:
        return residue_classes(2 ** (level - 2), [1])
    half = 2 ** (level - 1)
    return residue_classes(half, [1, 2 ** (level - 2) - 1])


def predicted_special_closure(p: int, n: int, sign: int = 1) -> OrbitClosure:
    """Closure of ``p**n + sign`` checked against its closed form.

    Odd ``p`` (sign +1): ``1 + p^n ℕ₀`` with index ``p^(n-1)(p-1)``, and
    ``1 + p^n`` has order exactly ``p`` mod ``p^(n+1)``. For ``p = 2``:
    ``1 + 2^n ℕ₀`` (sign +1) or ``(1 + 2^(n+1)ℕ₀) ∪ (2^n - 1 + 2^(n+1)ℕ₀)``
    (sign -1), both with index ``2^(n-1)``.
    """
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    if not nt_core.is_prime(p):
        raise DomainError(f"{p} is not prime")
    if p == 2:
        if n < 2:
            raise DomainError("p = 2 needs n >= 2")
    elif sign != 1 or n < 1:
        raise DomainError("odd p needs sign = +1 and n >= 1")

    a = p**n + sign
    X = orbit_closure(a, p)
    if p != 2:
        expected_set = residue_classes(p**n, [1])
        expected_index = p ** (n - 1) * (p - 1)
        if nt_core.mult_order(a, p, n + 1) != p:
            raise ConsistencyError(f"{a} does not have order {p} mod {p}^{n + 1}")
    elif sign == 1:
        expected_set = residue_classes(2**n, [1])
        expected_index = 2 ** (n - 1)
    else:
        expected_set = residue_classes(2 ** (n + 1), [1, 2**n - 1])
        expected_index = 2 ** (n - 1)
    if X.set != expected_set or X.index != expected_index:
        raise ConsistencyError(
            f"closure of {a} (p={p}): got {X.set} / index {X.index}, "
            f"expected {expected_set} / index {expected_index}"
        )
    return X


def saturated_closure(a: int, p: int, level: int) -> PeriodicSet:
    """Preimage of the subgroup generated by ``a`` mod ``p**level``."""
    return canonicalize(PeriodicSet(1, p**level, cyclic_subgroup(a, p**level)))
