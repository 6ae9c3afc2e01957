"""Exception types raised by freesummand."""


class FreeSummandError(ValueError):
    """Base class for all domain errors."""


class BoundExceeded(FreeSummandError):
    """An enumeration oracle was asked to exceed its element budget."""


class BudgetExceeded(FreeSummandError):
    """A chart or sweep would produce more cells than allowed."""


class HypothesisViolated(FreeSummandError):
    """An input does not satisfy the hypotheses of the requested construction."""


class PrimeOutsideSet(FreeSummandError):
    """A denominator has a prime factor outside the permitted prime set."""

    def __init__(self, prime, prime_set):
        super().__init__(f"prime {prime} divides the denominator but is not in {prime_set}")
        self.prime = prime


class InvalidParameters(FreeSummandError):
    """Parameters outside the domain of a classifier."""


class OutOfRange(FreeSummandError):
    """Arguments outside the range handled by a proof-obligation verifier."""
