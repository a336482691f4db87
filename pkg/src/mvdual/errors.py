"""Exception hierarchy shared by every module.

Everything raised on purpose derives from :class:`DomainError`, which the CLI
maps to exit code 1.
"""

from __future__ import annotations


class DomainError(ValueError):
    """Input is well formed but violates a mathematical precondition."""


class NotPrimeError(DomainError):
    pass


class CanonicalFormError(DomainError):
    """A serialized supernatural number is not in canonical form."""


class DenominatorViolation(DomainError):
    """A point map increases a denominator at ``point``."""

    def __init__(self, point: str, message: str | None = None):
        self.point = point
        super().__init__(message or f"denominator increases at point {point!r}")


class BoundaryMismatch(DomainError):
    """Arrows do not compose or are not parallel."""


class PreconditionError(DomainError):
    """One or more hypotheses of a construction fail.

    ``violations`` lists every failing hypothesis, not just the first.
    """

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class BudgetExceeded(DomainError):
    def __init__(self, what: str, required: int, budget: int):
        self.what = what
        self.required = required
        self.budget = budget
        super().__init__(f"{what}: requires {required}, budget is {budget}")


class UnknownIdentifier(DomainError):
    pass


class InternalError(AssertionError):
    """A post-condition that the theory guarantees did not hold: a bug."""
