"""p-adic closures of the powers of an integer.

Once the multiplicative order of a modulo p^n reaches max(p, 3), the
closure stops shrinking: it is the preimage of the cyclic subgroup generated
by a at that level. The index of that subgroup is the main invariant.
"""
from golomb_lab.orbit_closures import orbit_closure
from golomb_lab.verify import padic_orbit_oracle

for p in (2, 3, 5):
    print(f"p = {p}")
    for a in range(2, 20):
        if a % p == 0:
            continue
        X = orbit_closure(a, p)
        branch = f"  {X.two_adic_branch.value}" if X.two_adic_branch else ""
        print(f"  a = {a:>2}  level {X.level}  index {X.index:>3}  {X.set}{branch}")
    print()

a, p = 7, 2
X = orbit_closure(a, p)
print(f"powers of {a} modulo 2^depth, as periodic sets:")
for depth in range(1, X.level + 3):
    marker = "  <- level" if depth == X.level else ""
    print(f"  depth {depth}: {padic_orbit_oracle(a, p, depth)}{marker}")
