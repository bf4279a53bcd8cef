"""Unit groups modulo prime powers.

Odd prime powers have cyclic unit groups. Modulo 2^n with n >= 3 the group
splits as {±1} times the cyclic group generated by 5.
"""
from golomb_lab.nt_core import mult_order, unit_group_structure

for p, n in [(3, 2), (5, 3), (7, 2), (2, 2), (2, 5), (2, 8)]:
    D = unit_group_structure(p, n)
    print(f"(ℤ/{p}^{n})^×  order {D.order:>4}  {D.shape}")

print()
print("orders of 3, 5, 7 modulo growing powers of 2")
for n in range(3, 11):
    print(f"  2^{n:<2}", *(f"{mult_order(a, 2, n):>4}" for a in (3, 5, 7)))
