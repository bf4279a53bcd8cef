"""Eventually periodic subsets of the positive integers.

A :class:`PeriodicSet` is described by a threshold ``T``, a modulus ``M``, a
sorted array of residues mod ``M`` and a finite tuple of exceptional members
below ``T``::

    x in S  <=>  (x < T and x in exceptions) or (x >= T and x % M in residues)

Every public operation returns the canonical form (minimal period, minimal
threshold), so ``==`` on results is set equality. Zero is never a member.
"""
from __future__ import annotations

import enum
import math
from typing import Iterable, Sequence

import numpy as np

from . import nt_core
from .errors import DomainError, ResourceError

MODULUS_LIMIT = 2**64
# Largest residue table / enumeration we are willing to materialize.
TABLE_LIMIT = 2**25

_INT64_SAFE = 2**62


def _dtype_for(modulus: int):
    return np.int64 if modulus < _INT64_SAFE else object


def _as_residue_array(values: Iterable[int], modulus: int) -> np.ndarray:
    arr = np.asarray(list(values) if not isinstance(values, np.ndarray) else values)
    dtype = _dtype_for(modulus)
    if arr.size == 0:
        return np.empty(0, dtype=dtype)
    arr = np.unique(arr.astype(dtype) % modulus)
    arr.flags.writeable = False
    return arr


def _check_modulus(m: int) -> None:
    if m > MODULUS_LIMIT:
        raise ResourceError(f"modulus {m} exceeds 2^64")


def _check_table(size: int, what: str) -> None:
    if size > TABLE_LIMIT:
        raise ResourceError(f"{what} would need {size} entries (limit {TABLE_LIMIT})")


class PeriodicSet:
    """Exact eventually periodic subset of ℕ = {1, 2, ...}.

    The constructor stores whatever it is given (after basic validation); use
    :func:`canonicalize` or the module-level constructors to obtain the
    canonical form.
    """

    __slots__ = ("threshold", "modulus", "residues", "exceptions", "_resset")

    def __init__(
        self,
        threshold: int,
        modulus: int,
        residues: Iterable[int],
        exceptions: Iterable[int] = (),
    ):
        threshold, modulus = int(threshold), int(modulus)
        if threshold < 1 or modulus < 1:
            raise DomainError("threshold and modulus must be positive")
        _check_modulus(modulus)
        self.threshold = threshold
        self.modulus = modulus
        self.residues = _as_residue_array(residues, modulus)
        self.exceptions = tuple(sorted({int(e) for e in exceptions if 1 <= e < threshold}))
        self._resset = None

    # -- membership -------------------------------------------------------

    def _residue_lookup(self) -> frozenset:
        if self._resset is None:
            self._resset = frozenset(int(r) for r in self.residues)
        return self._resset

    def __contains__(self, x: int) -> bool:
        x = int(x)
        if x < 1:
            return False
        if x < self.threshold:
            return x in self.exceptions
        return x % self.modulus in self._residue_lookup()

    def contains_array(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized membership for an integer array."""
        xs = np.asarray(xs)
        tail = (xs >= self.threshold) & np.isin(xs % self.modulus, self.residues)
        if self.exceptions:
            tail |= (xs < self.threshold) & np.isin(xs, np.asarray(self.exceptions))
        return tail & (xs >= 1)

    def members_upto(self, n: int) -> np.ndarray:
        """Sorted members in ``[1, n]``."""
        exc = [e for e in self.exceptions if e <= n]
        if n < self.threshold or self.residues.size == 0:
            return np.asarray(exc, dtype=np.int64)
        first_block = self.threshold // self.modulus
        last_block = n // self.modulus
        blocks = last_block - first_block + 1
        _check_table(blocks * self.residues.size, "member enumeration")
        offsets = self.modulus * np.arange(first_block, last_block + 1, dtype=self.residues.dtype)
        xs = (offsets[:, None] + self.residues[None, :]).ravel()
        xs = xs[(xs >= self.threshold) & (xs <= n)]
        return np.concatenate([np.asarray(exc, dtype=xs.dtype), xs])

    # -- structure --------------------------------------------------------

    def is_empty(self) -> bool:
        return self.residues.size == 0 and not self.exceptions

    def is_finite(self) -> bool:
        return self.residues.size == 0

    def _key(self):
        return (
            self.threshold,
            self.modulus,
            tuple(int(r) for r in self.residues),
            self.exceptions,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, PeriodicSet):
            return NotImplemented
        return (
            self.threshold == other.threshold
            and self.modulus == other.modulus
            and self.exceptions == other.exceptions
            and np.array_equal(self.residues, other.residues)
        )

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return (
            f"PeriodicSet(threshold={self.threshold}, modulus={self.modulus}, "
            f"residues={[int(r) for r in self.residues]}, exceptions={list(self.exceptions)})"
        )

    def __str__(self) -> str:
        return progression_str(self)

    def __and__(self, other: PeriodicSet) -> PeriodicSet:
        return intersect(self, other)

    def __or__(self, other: PeriodicSet) -> PeriodicSet:
        return union(self, other)

    def __sub__(self, other: PeriodicSet) -> PeriodicSet:
        return difference(self, other)

    def __invert__(self) -> PeriodicSet:
        return complement(self)

    def to_json(self) -> dict:
        return {
            "threshold": self.threshold,
            "modulus": self.modulus,
            "residues": [int(r) for r in self.residues],
            "exceptions": list(self.exceptions),
        }

    @classmethod
    def from_json(cls, data: dict) -> PeriodicSet:
        return canonicalize(
            cls(data["threshold"], data["modulus"], data["residues"], data.get("exceptions", ()))
        )


# -- canonical form -------------------------------------------------------


def _rule_member(residues: frozenset, modulus: int, x: int) -> bool:
    return x % modulus in residues


def canonicalize(S: PeriodicSet) -> PeriodicSet:
    """Reduce to the minimal period, then to the minimal threshold."""
    M = S.modulus
    R = S.residues
    if R.size == 0:
        M = 1
        R = np.empty(0, dtype=np.int64)
    else:
        for q, _ in nt_core.factorize(M):
            while M % q == 0:
                d = M // q
                reduced = np.unique(R % d)
                # R is a union of classes mod d iff every class keeps all q lifts.
                if reduced.size * q != R.size:
                    break
                R, M = reduced, d
    residues = frozenset(int(r) for r in R)
    T = S.threshold
    exc = set(S.exceptions)
    while T > 1:
        x = T - 1
        if _rule_member(residues, M, x) != (x in exc):
            break
        exc.discard(x)
        T = x
    out = PeriodicSet(T, M, R, exc)
    out._resset = residues
    return out


def is_canonical(S: PeriodicSet) -> bool:
    return canonicalize(S) == S


# -- constructors -----------------------------------------------------------


def naturals() -> PeriodicSet:
    return PeriodicSet(1, 1, [0])


def empty() -> PeriodicSet:
    return PeriodicSet(1, 1, [])


def residue_classes(modulus: int, residues: Iterable[int]) -> PeriodicSet:
    """``ℕ ∩ (r + modulus·ℤ)`` for each given ``r``, united."""
    return canonicalize(PeriodicSet(1, modulus, residues))


def finite(values: Iterable[int]) -> PeriodicSet:
    values = [int(v) for v in values if v >= 1]
    return canonicalize(PeriodicSet(max(values, default=0) + 1, 1, [], values))


def from_progression(a: int, b: int) -> PeriodicSet:
    """The progression ``a + b·ℕ₀ = {a, a+b, a+2b, ...}``.

    >>> print(from_progression(7, 4))
    7+4ℕ₀
    """
    if a < 1 or b < 1:
        raise DomainError(f"progression needs a, b >= 1, got ({a}, {b})")
    return canonicalize(PeriodicSet(a, b, [a % b]))


def is_golomb_basic(a: int, b: int) -> bool:
    """Whether ``a + b·ℕ₀`` belongs to the base of the Golomb topology."""
    return a >= 1 and b >= 1 and math.gcd(a, b) == 1


def member(S: PeriodicSet, x: int) -> bool:
    return x in S


# -- boolean algebra --------------------------------------------------------


def _lift(R: np.ndarray, M: int, L: int) -> np.ndarray:
    k = L // M
    _check_table(R.size * k, "residue lift")
    dtype = _dtype_for(L)
    steps = M * np.arange(k, dtype=np.int64).astype(dtype)
    return (R.astype(dtype)[:, None] + steps[None, :]).ravel()


def _lcm(a: int, b: int) -> int:
    L = a // math.gcd(a, b) * b
    _check_modulus(L)
    return L


def _tail_intersection(A: PeriodicSet, B: PeriodicSet) -> tuple[int, np.ndarray]:
    MA, MB = A.modulus, B.modulus
    L = _lcm(MA, MB)
    RA, RB = A.residues, B.residues
    if RA.size == 0 or RB.size == 0:
        return L, np.empty(0, dtype=np.int64)
    if math.gcd(MA, MB) == 1 and RA.size * RB.size <= TABLE_LIMIT:
        # Coprime moduli: every pair of classes combines to exactly one class mod L.
        dtype = object if MB * MB >= _INT64_SAFE or L >= _INT64_SAFE else np.int64
        ra = RA.astype(dtype)
        rb = RB.astype(dtype)
        inv = pow(MA, -1, MB) if MB > 1 else 0
        t = ((rb[None, :] - ra[:, None]) % MB) * inv % MB
        return L, (ra[:, None] + MA * t).ravel()
    # Lift the side whose lift is smaller, filter by the other.
    if RA.size * (L // MA) > RB.size * (L // MB):
        A, B = B, A
    lifted = _lift(A.residues, A.modulus, L)
    return L, lifted[np.isin(lifted % B.modulus, B.residues)]


def intersect(A: PeriodicSet, B: PeriodicSet) -> PeriodicSet:
    L, tail = _tail_intersection(A, B)
    T = max(A.threshold, B.threshold)
    # Members below T must be exceptions of the side owning the larger threshold.
    high, low = (A, B) if A.threshold >= B.threshold else (B, A)
    exc = [x for x in high.exceptions if x in low]
    return canonicalize(PeriodicSet(T, L, tail, exc))


def complement(S: PeriodicSet) -> PeriodicSet:
    _check_table(S.modulus, "complement residue table")
    _check_table(S.threshold, "complement exception table")
    dtype = _dtype_for(S.modulus)
    allres = np.arange(S.modulus, dtype=np.int64).astype(dtype)
    tail = np.setdiff1d(allres, S.residues, assume_unique=True)
    exc = set(range(1, S.threshold)) - set(S.exceptions)
    return canonicalize(PeriodicSet(S.threshold, S.modulus, tail, exc))


def _members_below(S: PeriodicSet, T: int) -> list[int]:
    """Members of ``S`` in ``[1, T)``."""
    out = [x for x in S.exceptions if x < T]
    if S.threshold < T:
        _check_table(T - S.threshold, "exception scan")
        out += [x for x in range(S.threshold, T) if x in S]
    return out


def union(A: PeriodicSet, B: PeriodicSet) -> PeriodicSet:
    L = _lcm(A.modulus, B.modulus)
    lift_size = A.residues.size * (L // A.modulus) + B.residues.size * (L // B.modulus)
    if lift_size > TABLE_LIMIT:
        # Dense on both sides: go through the complements instead.
        return complement(intersect(complement(A), complement(B)))
    tail = np.union1d(_lift(A.residues, A.modulus, L), _lift(B.residues, B.modulus, L))
    T = max(A.threshold, B.threshold)
    exc = set(_members_below(A, T)) | set(_members_below(B, T))
    return canonicalize(PeriodicSet(T, L, tail, exc))


def difference(A: PeriodicSet, B: PeriodicSet) -> PeriodicSet:
    """``A \\ B`` without materializing the complement of ``B``.

    Agrees with ``intersect(A, complement(B))``; only the residues of ``A``
    are lifted, so a sparse ``A`` stays cheap even for large moduli.
    """
    L = _lcm(A.modulus, B.modulus)
    lifted = _lift(A.residues, A.modulus, L)
    tail = lifted[~np.isin(lifted % B.modulus, B.residues)]
    T = max(A.threshold, B.threshold)
    exc = [x for x in _members_below(A, T) if x not in B]
    return canonicalize(PeriodicSet(T, L, tail, exc))


class Relation(enum.Enum):
    EQUAL = "Equal"
    PROPER_SUBSET = "ProperSubset"
    PROPER_SUPERSET = "ProperSuperset"
    INCOMPARABLE = "Incomparable"


def relate(A: PeriodicSet, B: PeriodicSet) -> Relation:
    """Exact inclusion relation between two sets."""
    A, B = canonicalize(A), canonicalize(B)
    both = intersect(A, B)
    a_in_b, b_in_a = both == A, both == B
    if a_in_b and b_in_a:
        return Relation.EQUAL
    if a_in_b:
        return Relation.PROPER_SUBSET
    if b_in_a:
        return Relation.PROPER_SUPERSET
    return Relation.INCOMPARABLE


def is_subset(A: PeriodicSet, B: PeriodicSet) -> bool:
    return relate(A, B) in (Relation.EQUAL, Relation.PROPER_SUBSET)


def meets_progression(S: PeriodicSet, x: int, b: int) -> bool:
    """Whether ``(x + b·ℕ₀) ∩ S`` is nonempty, decided by exact intersection."""
    return not intersect(S, from_progression(x, b)).is_empty()


# -- Golomb closures --------------------------------------------------------


def golomb_closure(a: int, b: int) -> PeriodicSet:
    """Closure of the basic set ``a + b·ℕ₀`` in the Golomb topology.

    For coprime ``a, b`` the closure is the intersection, over the primes
    ``p | b``, of ``pℕ ∪ (a + p^{v_p(b)}ℤ)``; for ``b = 1`` it is all of ℕ.

    >>> print(congruence_str(golomb_closure(2, 3)))
    {x ≡ 0, 2 (mod 3)}
    """
    if not is_golomb_basic(a, b):
        raise DomainError(f"golomb_closure needs coprime a, b >= 1, got ({a}, {b})")
    out = naturals()
    for p, l in nt_core.factorize(b):
        q = p**l
        out = intersect(out, union(residue_classes(p, [0]), residue_classes(q, [a % q])))
    return out


# -- rendering --------------------------------------------------------------


def _progression_terms(S: PeriodicSet) -> list[str]:
    terms = []
    M, T = S.modulus, S.threshold
    starts = []
    for r in S.residues:
        r = int(r)
        start = T + (r - T) % M
        starts.append(start)
    for start in sorted(starts):
        if M == 1:
            terms.append("ℕ" if start == 1 else f"{start}+ℕ₀")
        else:
            terms.append(f"{start}+{M}ℕ₀")
    return terms


def progression_str(S: PeriodicSet) -> str:
    """Render as a union of progressions, e.g. ``(1+8ℕ₀)∪(3+8ℕ₀)``."""
    terms = []
    if S.exceptions:
        terms.append("{" + ", ".join(str(e) for e in S.exceptions) + "}")
    terms += _progression_terms(S)
    if not terms:
        return "∅"
    if len(terms) == 1:
        return terms[0]
    return "∪".join(t if t.startswith("{") else f"({t})" for t in terms)


def congruence_str(S: PeriodicSet) -> str:
    """Render as congruence conditions, e.g. ``{x ≡ 0, 2 (mod 3)}``."""
    if S.is_empty():
        return "∅"
    parts = []
    if S.residues.size:
        if S.modulus == 1 and S.threshold == 1:
            parts.append("ℕ")
        else:
            res = ", ".join(str(int(r)) for r in S.residues)
            cond = f"x ≡ {res} (mod {S.modulus})"
            if S.threshold > 1:
                cond = f"x ≥ {S.threshold} : {cond}"
            parts.append("{" + cond + "}")
    if S.exceptions:
        parts.insert(0, "{" + ", ".join(str(e) for e in S.exceptions) + "}")
    return " ∪ ".join(parts)


def window_members(S: PeriodicSet, window: int) -> frozenset[int]:
    return frozenset(int(x) for x in S.members_upto(window))


def from_members(values: Sequence[int], modulus: int) -> PeriodicSet:
    """Periodic set (threshold 1) of the classes mod ``modulus`` hit by ``values``."""
    return residue_classes(modulus, [v % modulus for v in values])
