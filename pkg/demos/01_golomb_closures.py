"""Closures of arithmetic progressions in the Golomb topology.

The closure of a + bℕ₀ keeps, for each prime p dividing b, every multiple of
p together with the class of a modulo the full power of p in b. We print a few
closures, then watch the neighbourhood oracle converge to them as its
modulus bound grows.
"""
from golomb_lab.periodic_sets import congruence_str, from_progression, golomb_closure, progression_str
from golomb_lab.verify import full_oracle_bound, golomb_closure_oracle

WINDOW = 60

for a, b in [(2, 3), (1, 4), (5, 12), (7, 40)]:
    C = golomb_closure(a, b)
    print(f"closure of {progression_str(from_progression(a, b))}: {congruence_str(C)}")

print()
a, b = 5, 12
S = from_progression(a, b)
exact = {x for x in range(1, WINDOW + 1) if x in golomb_closure(a, b)}
print(f"oracle for {a}+{b}ℕ₀ on [1, {WINDOW}]; the exact closure has {len(exact)} members there")
for bound in (1, 2, 4, 8, 16, full_oracle_bound(b)):
    got = golomb_closure_oracle(S, bound, WINDOW)
    extra = sorted(got - exact)
    print(f"  bound {bound:>3}: {len(got):>2} members, {len(extra):>2} spurious {extra[:8]}")
