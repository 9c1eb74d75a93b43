"""Error taxonomy shared by the library and the CLI exit-code mapping."""


class CycleConesError(Exception):
    """Base class for all library errors."""

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def payload(self):
        return {"message": self.message, **self.details}


class InputError(CycleConesError):
    """Malformed or inconsistent caller input (CLI exit code 1)."""


class DomainError(CycleConesError):
    """Valid input outside an operation's mathematical domain (CLI exit code 2).

    Carries exact witness data (separating functional, recession direction,
    offending submatrix, ...) in ``details`` whenever the violated
    precondition has one.
    """
