"""Exception types shared across the package."""


class MetaplecticError(Exception):
    """Base class for errors raised by this package."""


class ZeroInput(MetaplecticError):
    """An operation that needs a nonzero field element received zero."""


class RegimeError(MetaplecticError, ValueError):
    """The pair (p, n) is outside the supported tame/dyadic regimes."""


class PreconditionViolated(MetaplecticError):
    """An operation was called outside its stated domain."""


class NotInCongruenceSubgroup(MetaplecticError):
    """Matrix is not congruent to the identity at the requested depth."""


class WrongKind(MetaplecticError):
    """A canonical-form target was passed to the wrong branch."""


class VerificationFailed(MetaplecticError):
    """A self-checking construction produced output that failed its check."""


class UnknownSuite(MetaplecticError, ValueError):
    """Requested verification suite does not exist."""
