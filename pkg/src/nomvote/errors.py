"""Exception types shared across the package."""


class NomvoteError(Exception):
    """Base class for all package-specific errors."""


class BudgetExceededError(NomvoteError):
    """An enumeration would exceed the configured hard cap.

    Scans are exact or they refuse; nothing is ever silently truncated.
    """

    def __init__(self, what: str, required: int, limit: int):
        self.what = what
        self.required = required
        self.limit = limit
        super().__init__(f"{what} needs {required} items, budget allows {limit}")


class WrongSpaceKindError(NomvoteError, ValueError):
    """An operation was applied to the wrong kind of alternative space."""


class DimensionMismatchError(NomvoteError, ValueError):
    """Input dimensions are inconsistent with the rule's (n, space)."""


class AssumptionViolatedError(NomvoteError):
    """A closed form's standing assumption does not hold for this rule.

    Callers should fall back to the brute-force route.
    """


class UnsupportedFamilyError(NomvoteError):
    """No closed form exists for this rule family; use brute force."""


class HypothesisNotVerifiedError(NomvoteError):
    """A conditional predicate was invoked without its hypotheses holding."""
