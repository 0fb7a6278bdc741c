"""Exception types shared across the package."""


class ListChromError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSpec(ListChromError):
    """A family description violates a parity or length constraint."""


class InvalidParams(ListChromError):
    """Numeric parameters outside their allowed range."""


class DomainMismatch(ListChromError):
    """Graph, list assignment and colouring do not share a vertex set."""


class WidthViolation(ListChromError):
    """A list does not have the width required by the operation."""


class EvenPath(ListChromError):
    """An odd-path-only quantity was requested for an even-length path."""


class CapExceeded(ListChromError):
    """Instance too large for an exhaustive oracle."""


class UnsupportedFamily(ListChromError):
    """The family is outside the scope of the constructive colourer."""


class Infeasible(ListChromError):
    """Path colouring search failed although the criterion accepted.

    Must never fire; treated as a test failure wherever it surfaces.
    """


class NotFound(ListChromError):
    """Hub pre-colouring search exhausted without a hit.

    A reproducible occurrence would contradict the guarantees the colourer
    relies on, so the raising site dumps a counterexample file first.
    """

    def __init__(self, message, dump_path=None):
        super().__init__(message)
        self.dump_path = dump_path
