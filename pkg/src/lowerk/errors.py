"""Exception hierarchy.

Every error raised by the library derives from :class:`LowerKError`, so the
CLI can report a structured error name (``type(err).__name__``).
"""


class LowerKError(Exception):
    """Base class for all library errors."""


class InputError(LowerKError):
    """Errors caused by bad user input (CLI exit code 2)."""


class UnknownName(InputError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class MalformedNotation(InputError, ValueError):
    pass


class AsymmetricMatrix(InputError, ValueError):
    pass


class UnknownType(InputError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NonPrimeP(InputError, ValueError):
    pass


class ComputationError(LowerKError):
    """Errors signalling an unmodeled case or an internal bug (exit code 3)."""


class UnclassifiableRank3(ComputationError):
    pass


class ToleranceAmbiguity(ComputationError):
    pass


class LoopDetected(ComputationError):
    def __init__(self, message, descriptor=None):
        super().__init__(message)
        self.descriptor = descriptor


class UnsupportedAmalgam(ComputationError):
    pass


class MissingInducedMap(ComputationError):
    pass


class NonCollapsingPage(ComputationError):
    pass


class UnknownTag(ComputationError):
    pass
