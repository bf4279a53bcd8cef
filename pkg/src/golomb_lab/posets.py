"""Finite truncations of the orbit-closure posets and the divisor posets.

``build_xp`` orders orbit closures by reverse inclusion (``X <= Y`` iff
``Y ⊆ X``). ``dp_elements`` gives the divisors of ``p^n (p - 1)`` under
divisibility. For odd ``p`` the map ``X -> i(X)`` identifies the two.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

import numpy as np

from . import nt_core
from .errors import ConsistencyError, DomainError
from .orbit_closures import OrbitClosure, TwoAdicBranch, orbit_closure
from .periodic_sets import Relation, relate


@dataclass(frozen=True)
class Node:
    label: str
    payload: Any  # OrbitClosure or int

    @property
    def key(self):
        if isinstance(self.payload, OrbitClosure):
            return self.payload.set
        return self.payload


@dataclass
class FinitePoset:
    nodes: list[Node]
    leq_matrix: np.ndarray
    hasse_edges: list[tuple[int, int]]
    # A deeper truncation containing every node; used to decide ↑-chains
    # without the artefacts of the truncation boundary.
    ambient: Optional["FinitePoset"] = field(default=None, repr=False)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.leq_matrix[i, j])

    def __len__(self) -> int:
        return len(self.nodes)

    def labels(self) -> list[str]:
        return [n.label for n in self.nodes]

    def index_of(self, label: str) -> int:
        return self.labels().index(label)

    def upper_set(self, i: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.leq_matrix[i])]

    def lower_set(self, i: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.leq_matrix[:, i])]

    def to_json(self) -> dict:
        def payload(n: Node):
            return n.payload.to_json() if isinstance(n.payload, OrbitClosure) else n.payload

        return {
            "nodes": [{"label": n.label, "payload": payload(n)} for n in self.nodes],
            "edges": [[i, j] for i, j in self.hasse_edges],
        }


def poset_from_relation(nodes: Sequence[Node], leq: Callable[[Node, Node], bool]) -> FinitePoset:
    """Tabulate ``leq`` on ``nodes``, check the partial-order axioms, find covers."""
    n = len(nodes)
    mat = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            mat[i, j] = leq(nodes[i], nodes[j])
    check_partial_order(mat)
    return FinitePoset(list(nodes), mat, covering_pairs(mat))


def check_partial_order(mat: np.ndarray) -> None:
    n = mat.shape[0]
    if not mat[np.arange(n), np.arange(n)].all():
        raise ConsistencyError("relation is not reflexive")
    if (mat & mat.T & ~np.eye(n, dtype=bool)).any():
        raise ConsistencyError("relation is not antisymmetric (duplicate nodes?)")
    m = mat.astype(np.int64)
    if ((m @ m > 0) & ~mat).any():
        raise ConsistencyError("relation is not transitive")


def covering_pairs(mat: np.ndarray) -> list[tuple[int, int]]:
    n = mat.shape[0]
    strict = mat & ~np.eye(n, dtype=bool)
    s = strict.astype(np.int64)
    covers = strict & ~(s @ s > 0)
    return [(int(i), int(j)) for i, j in zip(*np.nonzero(covers))]


def chain_poset(values: Sequence[int]) -> FinitePoset:
    """Divisibility poset on an explicit list of positive integers."""
    nodes = [Node(str(v), v) for v in values]
    return poset_from_relation(nodes, lambda x, y: y.payload % x.payload == 0)


# -- the divisor posets -----------------------------------------------------


def _dp(p: int, nmax: int) -> FinitePoset:
    divisors = nt_core.factorize(p**nmax * (p - 1)).divisors()
    nodes = [Node(str(d), d) for d in divisors]
    return poset_from_relation(nodes, lambda x, y: y.payload % x.payload == 0)


def dp_elements(p: int, nmax: int) -> FinitePoset:
    """Divisors of ``p^nmax (p-1)`` ordered by divisibility.

    The poset carries the ``nmax + 1`` truncation as its ambient, which is
    enough for ↑-chain detection: a non-chain element ``p^k e`` with
    ``e | p-1, e != p-1`` is witnessed by ``p^(k+1) e`` and ``p^k (p-1)``.
    """
    if not nt_core.is_prime(p):
        raise DomainError(f"{p} is not prime")
    if nmax < 0:
        raise DomainError(f"nmax must be >= 0, got {nmax}")
    P = _dp(p, nmax)
    P.ambient = _dp(p, nmax + 1)
    return P


# -- the orbit-closure posets -----------------------------------------------


def _reverse_inclusion(X: OrbitClosure, Y: OrbitClosure) -> bool:
    return relate(Y.set, X.set) in (Relation.EQUAL, Relation.PROPER_SUBSET)


def _index_criterion(X: OrbitClosure, Y: OrbitClosure) -> bool:
    if X.p != 2:
        # Y ⊆ X  iff  i(X) | i(Y)
        return Y.index % X.index == 0
    if (X.level, X.two_adic_branch) == (Y.level, Y.two_adic_branch):
        return True
    # Y ⊊ X  iff  Y ⊆ 1 + 4ℕ₀ and i(X) < i(Y)
    return Y.two_adic_branch is TwoAdicBranch.PLUS_ONE and X.index < Y.index


def xp_leq(X: OrbitClosure, Y: OrbitClosure) -> bool:
    """Reverse-inclusion order, decided by set inclusion and by indices.

    The two answers must agree; a disagreement raises ConsistencyError.
    """
    if X.p != Y.p:
        raise DomainError(f"closures for different primes ({X.p} vs {Y.p})")
    by_sets = _reverse_inclusion(X, Y)
    by_index = _index_criterion(X, Y)
    if by_sets != by_index:
        raise ConsistencyError(
            f"order of cl({X.a}) vs cl({Y.a}) mod {X.p}: sets say {by_sets}, indices say {by_index}"
        )
    return by_sets


def closure_label(a: int) -> str:
    return f"cl({a}^ℕ)"


def xp_nodes(p: int, generator_bound: int) -> list[Node]:
    """Distinct closures of ``a in [2, generator_bound]``; each keeps its smallest generator."""
    seen: dict = {}
    for a in range(2, generator_bound + 1):
        if a % p == 0:
            continue
        X = orbit_closure(a, p)
        seen.setdefault(X.set, X)
    return [Node(closure_label(X.a), X) for X in seen.values()]


def build_xp(p: int, generator_bound: int) -> FinitePoset:
    if not nt_core.is_prime(p):
        raise DomainError(f"{p} is not prime")
    if generator_bound < 2:
        raise DomainError(f"generator_bound must be >= 2, got {generator_bound}")
    nodes = xp_nodes(p, generator_bound)
    return poset_from_relation(nodes, lambda x, y: xp_leq(x.payload, y.payload))


# -- order invariants -------------------------------------------------------


def _is_chain(mat: np.ndarray, idx: Sequence[int]) -> bool:
    sub = mat[np.ix_(idx, idx)]
    return bool((sub | sub.T).all())


def upchain_elements(P: FinitePoset) -> list[Node]:
    """Nodes whose upper set is linearly ordered.

    When ``P`` has an ambient truncation the upper sets are taken there.
    """
    Q = P.ambient or P
    where = {n.key: k for k, n in enumerate(Q.nodes)}
    out = []
    for node in P.nodes:
        k = where[node.key]
        if _is_chain(Q.leq_matrix, Q.upper_set(k)):
            out.append(node)
    return out


def minimal_elements(P: FinitePoset) -> list[Node]:
    strict = P.leq_matrix & ~np.eye(len(P), dtype=bool)
    return [P.nodes[j] for j in range(len(P)) if not strict[:, j].any()]


def smallest_upchain_downset_size(p: int, nmax: int) -> int:
    """Size of the down-set of the least ↑-chain element of the divisor poset.

    That element is ``p - 1``, so the answer is the number of divisors of
    ``p - 1``; it equals 2 exactly when ``p - 1`` is prime.
    """
    if p == 2:
        raise DomainError("only defined for odd primes")
    if nmax < 1:
        raise DomainError(f"nmax must be >= 1, got {nmax}")
    P = dp_elements(p, nmax)
    ups = [P.nodes.index(n) for n in upchain_elements(P)]
    least = [i for i in ups if all(P.leq(i, j) for j in ups)]
    if len(least) != 1:
        raise ConsistencyError(f"↑-chain elements of D_{p} have no least element")
    return len(P.lower_set(least[0]))


def is_antichain(closures: Sequence[OrbitClosure]) -> bool:
    for i, X in enumerate(closures):
        for Y in closures[i + 1 :]:
            if xp_leq(X, Y) or xp_leq(Y, X):
                return False
    return True


def index_map_is_isomorphism(P: FinitePoset, D: FinitePoset) -> bool:
    """Whether ``X -> i(X)`` embeds ``P`` (odd p) into ``D`` order-faithfully.

    Only nodes whose index appears in ``D`` take part.
    """
    dpos = {n.payload: k for k, n in enumerate(D.nodes)}
    pairs = [(k, dpos[n.payload.index]) for k, n in enumerate(P.nodes) if n.payload.index in dpos]
    images = [d for _, d in pairs]
    if len(set(images)) != len(images):
        return False
    return all(
        P.leq(i, j) == D.leq(di, dj) for i, di in pairs for j, dj in pairs
    )


# -- rendering --------------------------------------------------------------


def _natural_key(node: Node):
    payload = node.payload
    if isinstance(payload, OrbitClosure):
        return (0, payload.a)
    return (0, payload) if isinstance(payload, int) else (1, node.label)


def to_dot(P: FinitePoset, name: str = "hasse") -> str:
    """Graphviz DOT of the Hasse diagram, edges lower -> upper, ↑-chain nodes bold."""
    order = sorted(range(len(P)), key=lambda i: _natural_key(P.nodes[i]))
    bold = {n.key for n in upchain_elements(P)}
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i in order:
        node = P.nodes[i]
        style = ', style=bold, fontname="bold"' if node.key in bold else ""
        lines.append(f'  "{node.label}" [label="{node.label}"{style}];')
    rank = {i: r for r, i in enumerate(order)}
    for i, j in sorted(P.hasse_edges, key=lambda e: (rank[e[0]], rank[e[1]])):
        lines.append(f'  "{P.nodes[i].label}" -> "{P.nodes[j].label}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def divisor_count(n: int) -> int:
    return math.prod(e + 1 for _, e in nt_core.factorize(n))
