"""Exception hierarchy shared by the codec, the inverters and the CLI."""


class PbwtError(ValueError):
    """Base class for every error raised by this package."""


class InvalidSymbol(PbwtError):
    pass


class InvalidPrevString(PbwtError):
    pass


class AlphabetTooSmall(PbwtError):
    pass


class ModeMismatch(PbwtError):
    pass


class MalformedInput(PbwtError):
    """Transform input is not terminator-anchored (missing or repeated `$`)."""


class InvalidToken(PbwtError):
    pass


class InvalidLf(PbwtError):
    pass


class NotAPbwt(PbwtError):
    """The token sequence is not the pBWT of any p-string.

    ``problems`` lists every structural rule that was violated, when known.
    """

    def __init__(self, message, problems=()):
        super().__init__(message)
        self.problems = list(problems)
