"""Exception types shared across the package.

DomainError is the root of every failure mode the library knowingly
rejects; the CLI maps it to exit status 1 (argparse usage errors exit 2).
"""


class DomainError(Exception):
    """Rejected input or state; carries a human-readable diagnostic."""


class PresentationError(DomainError):
    """Malformed or inconsistent presentation input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownGeneratorError(DomainError):
    """A generator name or index outside the presentation."""


class WordSyntaxError(DomainError):
    """A word string that does not parse."""


class ClosureCapExceeded(DomainError):
    """Braid-move closure grew past the configured cap.

    The rewriting engine is worst-case exponential; rather than hang it
    fails loudly and names the offending word.
    """

    def __init__(self, word, cap: int):
        self.word = tuple(word)
        self.cap = cap
        super().__init__(
            f"braid-move closure exceeded cap {cap}; "
            f"word too long for this engine: {self.word}"
        )


class OracleUnsupported(DomainError):
    """Presentation outside the subclass a decision procedure requires."""


class PreconditionViolated(DomainError):
    """A checked mathematical precondition fails for the given input."""


class SearchExhausted(DomainError):
    """A randomized search budget ran out without an admissible witness."""


class InternalAssertionError(DomainError):
    """An invariant the theory guarantees failed: a bug trap, not bad input."""
