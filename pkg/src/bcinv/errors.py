"""Exception types shared across the library.

Everything raised on purpose derives from BcinvError so the CLI can map
domain failures to a JSON error object with exit status 1.
"""


class BcinvError(Exception):
    """Base class for all library errors."""


class MixedRings(BcinvError):
    """Two elements from different ring handles were combined."""


class NoInvolution(BcinvError):
    """A star-flavored operation was requested on a ring without involution."""


class InfiniteRing(BcinvError):
    """An enumeration-only operation was requested on an infinite ring."""


class CardinalityGuard(BcinvError):
    """An exhaustive computation would exceed the configured size guard."""


class NotAdditivelyClosed(BcinvError):
    """A direct-sum test received a set that is not an additive subgroup."""


class UniquenessViolation(BcinvError):
    """Two distinct solutions of the defining equation were found (bug trap)."""


class CriteriaDisagreement(BcinvError):
    """Provably equivalent existence criteria returned different verdicts (bug trap)."""


class NotRegular(BcinvError):
    """An inner inverse was requested for an element that has none."""


class NotOneSidedInvertible(BcinvError):
    """A one-sided inverse family was requested where no one-sided inverse exists."""


class HypothesisFailed(BcinvError):
    """A stated precondition (ideal equality, invertibility, ...) does not hold."""


class DimensionMismatch(BcinvError):
    """Subspaces with incompatible ambient space or orientation were compared."""


class UnknownSuite(BcinvError):
    """A verification suite id is not in the registry."""


class IndexBoundExceeded(BcinvError):
    """The index search ran past its bound (bug trap; cannot happen on supported rings)."""


class TableValidationError(BcinvError):
    """A Cayley-table ring failed validation on load."""
