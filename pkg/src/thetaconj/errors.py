"""Exception types shared by every module.

All of them derive from :class:`ThetaConjError` (itself a ``ValueError``) so
callers can catch domain failures in one place; the CLI reports the class
name on stderr.
"""


class ThetaConjError(ValueError):
    pass


class UnknownLetter(ThetaConjError):
    pass


class DuplicateLetter(ThetaConjError):
    pass


class IncompleteSpec(ThetaConjError):
    pass


class MalformedGroup(ThetaConjError):
    pass


class AlphabetMismatch(ThetaConjError):
    pass


class EmptyWord(ThetaConjError):
    pass


class InvalidConfig(ThetaConjError):
    pass
