"""Exception hierarchy shared by the ssat package."""


class SsatError(Exception):
    """Base class for all errors raised by this package."""


class WidthMismatchError(SsatError):
    """A code, assignment, or literal does not fit the declared width n."""


class MissingVariableError(SsatError):
    """A clause required to be fixed-width does not mention every variable."""


class DuplicateVariableError(SsatError):
    """A clause mentions the same variable more than once."""


class BlowupLimitError(SsatError):
    """Expanding a general instance would exceed the configured row cap."""


class OracleCapError(SsatError):
    """The exhaustive oracle was asked to enumerate beyond its width cap."""


class DomainError(SsatError):
    """A probability formula was evaluated outside its domain."""


class PreconditionError(SsatError):
    """A solver's input contract (sorted rows, exact length) was violated."""


class WitnessVerificationError(SsatError):
    """A candidate witness failed re-evaluation; an input promise was broken."""


class ParseError(SsatError):
    """Malformed instance file. Carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
