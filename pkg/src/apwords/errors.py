"""Exception types raised across the package."""


class ApwordsError(Exception):
    """Base class for all errors raised by apwords."""


class AlphabetMismatch(ApwordsError, ValueError):
    pass


class LetterNotInAlphabet(ApwordsError, ValueError):
    pass


class EmptyWord(ApwordsError, ValueError):
    pass


class EmptyPeriod(EmptyWord):
    pass


class FiniteLanguage(ApwordsError, ValueError):
    pass


class NotProlongable(ApwordsError, ValueError):
    pass


class SequenceTooLong(ApwordsError, ValueError):
    pass


class FactorNotFound(ApwordsError, LookupError):
    pass


class NoContexts(ApwordsError, ValueError):
    pass


class RegexParseError(ApwordsError, ValueError):
    """Malformed regular expression; ``position`` is the offending index."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position
