"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the range where the requested quantity is defined or known."""


class VerificationError(AssertionError):
    """Two computations that must agree exactly did not."""
