"""Exact computations around the Golomb topology on the positive integers.

Modules:

- ``nt_core``: factorization, valuations, CRT, multiplicative orders, unit groups mod p^n
- ``periodic_sets``: eventually periodic subsets of ℕ and Golomb closures of progressions
- ``orbit_closures``: p-adic closures of {a, a^2, ...} with their level and index
- ``posets``: finite truncations of the orbit-closure and divisor posets, Hasse diagrams
- ``verify``: brute-force oracles and verification sweeps
- ``cli``: the ``golomb-lab`` command
"""
from .errors import ConsistencyError, DomainError, GolombLabError, ResourceError
from .nt_core import (
    Factorization,
    UnitGroupDescriptor,
    crt_solve,
    factorize,
    is_prime,
    mult_order,
    padic_valuation,
    totient_prime_power,
    unit_group_structure,
)
from .orbit_closures import OrbitClosure, TwoAdicBranch, orbit_closure, predicted_special_closure, two_adic_branch
from .periodic_sets import (
    PeriodicSet,
    Relation,
    canonicalize,
    complement,
    difference,
    from_progression,
    golomb_closure,
    intersect,
    member,
    naturals,
    relate,
    union,
)
from .posets import (
    FinitePoset,
    build_xp,
    dp_elements,
    minimal_elements,
    smallest_upchain_downset_size,
    to_dot,
    upchain_elements,
    xp_leq,
)
from .verify import (
    VerificationReport,
    golomb_closure_oracle,
    lemma_suite,
    padic_orbit_oracle,
    reconstruct_n,
    unique_prime_predecessor_check,
)

__version__ = "0.1.0"
