"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: domain and resource errors are user
mistakes (1), consistency errors mean the implementation disagrees with
itself (3).
"""


class GolombLabError(Exception):
    pass


class DomainError(GolombLabError, ValueError):
    """Input outside the domain of an operation (non-prime p, p | a, ...)."""


class ResourceError(GolombLabError, RuntimeError):
    """A modulus or residue table grew past the hard size limits."""


class ConsistencyError(GolombLabError, RuntimeError):
    """Two independent computations of the same quantity disagree."""
