"""Exception types shared across the package."""


class UsageError(ValueError):
    """An operation was called with arguments outside its contract."""


class PreconditionError(ValueError):
    """An input value fails a stated precondition (e.g. not fixed by a subgroup)."""


class ClosureViolation(Exception):
    """A transfer, norm, or Weyl translate escaped its target level.

    Carries the offending element so validators can report it as a witness.
    """

    def __init__(self, check, witness, message):
        super().__init__(message)
        self.check = check
        self.witness = witness
        self.message = message
