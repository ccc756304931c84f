"""Exception hierarchy shared by all ncdp modules.

Two broad families matter for the CLI exit-code contract: DomainError
(validation / mathematical failure, exit 1) and ParseError (malformed
input files or flags, exit 2).
"""


class NcdpError(Exception):
    pass


class DomainError(NcdpError):
    """A well-formed input that violates a mathematical precondition."""


class ParseError(NcdpError):
    """Malformed file contents, unknown keys, or bad literal syntax."""


# exact-kernel
class NoSolution(DomainError):
    pass


class NonUnique(DomainError):
    pass


class NonIntegral(DomainError):
    pass


class BadPrime(DomainError):
    pass


# surface-lattice
class ContextMismatch(DomainError):
    pass


class InternalNonIntegral(NcdpError):
    """Parity invariant of a K-class was violated; indicates a bug upstream."""


class NonTermination(NcdpError):
    """Iteration cap exceeded in the section-count reduction; a bug, not bad input."""


# collections
class PositionOutOfRange(DomainError):
    pass


class InvalidFoundation(DomainError):
    pass


class NotLineBundles(DomainError):
    pass


class NormalizationFailed(DomainError):
    pass


# quiver-potential
class UndefinedOrder(DomainError):
    pass


class PotentialNotGraded(DomainError):
    """Potential is not homogeneous of winding degree 1 on an ordered quiver."""


class NegativePairInconsistent(DomainError):
    pass


# graded-verify
class WindowTooSmall(DomainError):
    pass


class TooLarge(DomainError):
    pass


# sklyanin-geometry
class AllZeroParams(DomainError):
    pass


class MalformedRelations(DomainError):
    pass


class NotHesseFamily(DomainError):
    pass
