"""Recovering n from the closed sets it determines.

Each n >= 2 is pinned down by the valuations of n - 1: intersecting
(1 + p^α ℕ₀) minus (1 + p^(α+1) ℕ₀) over the primes of n - 1, and forbidding
every other prime from dividing x - 1, leaves n alone.
"""
import time

from golomb_lab.nt_core import factorize
from golomb_lab.verify import lemma_suite, reconstruct_n

for n in (2, 10, 97, 360, 1001):
    fac = " · ".join(f"{p}^{e}" for p, e in factorize(n - 1)) or "1"
    print(f"n = {n:>4}: n - 1 = {fac:<14} reconstructed as {reconstruct_n(n)}")

t0 = time.perf_counter()
report = lemma_suite("rigidity", {"n_from": 2, "n_to": 2000})
print()
print(f"{report.summary()}  (wall {time.perf_counter() - t0:.1f}s)")
