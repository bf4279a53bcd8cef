"""Orbit-closure posets next to divisor posets.

For odd p the index map sends the reverse-inclusion order on closures onto
divisibility among divisors of p^n(p-1). The elements whose upper sets are
chains tell D_3 and D_5 apart: the least such element has 2 divisors below
it for p = 3 and 3 for p = 5.

Pass --dot to print Graphviz source for the diagrams instead.
"""
import sys

from golomb_lab.posets import (
    build_xp,
    dp_elements,
    index_map_is_isomorphism,
    minimal_elements,
    smallest_upchain_downset_size,
    to_dot,
    upchain_elements,
)


def describe(P, name):
    print(name)
    for i, j in P.hasse_edges:
        print(f"  {P.nodes[i].label} < {P.nodes[j].label}")
    print("  chains above:", ", ".join(n.label for n in upchain_elements(P)))


if "--dot" in sys.argv:
    print(to_dot(dp_elements(3, 2), "D3"))
    print(to_dot(dp_elements(5, 1), "D5"))
    print(to_dot(build_xp(2, 33), "X2"))
    sys.exit()

describe(dp_elements(3, 2), "D_3 truncated at 18")
describe(dp_elements(5, 1), "D_5 truncated at 20")
for p in (3, 5):
    print(f"least ↑-chain element of D_{p} has {smallest_upchain_downset_size(p, 3)} divisors below it")

print()
X2 = build_xp(2, 33)
describe(X2, "2-adic closures of a <= 33")
print("  minimal:", ", ".join(n.label for n in minimal_elements(X2)))

print()
for p in (3, 5, 7):
    print(f"p = {p}: index map is an isomorphism onto D_p:", index_map_is_isomorphism(build_xp(p, 80), dp_elements(p, 4)))
