"""Exception hierarchy shared by every module of the package."""


class SeqFSTError(Exception):
    """Base class for all errors raised by seqfst."""


class InvalidArgument(SeqFSTError, ValueError):
    """An element does not belong to the structure it is used with."""


class NotAPrefixError(SeqFSTError, ValueError):
    """left_residual(a, b) was requested but a is not a prefix of b."""


class InvalidInputError(SeqFSTError, ValueError):
    """Malformed input: unknown symbol, duplicate table word, empty table."""


class ParseError(InvalidInputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)


class SizeError(SeqFSTError, ValueError):
    """A bounded enumeration was asked to cover too many words."""


class NormalizationFailure(SeqFSTError):
    """Output pushing did not reach a fixpoint within its iteration bound."""

    def __init__(self, message, cycle=()):
        self.cycle = tuple(cycle)
        super().__init__(message)


class LemmaViolation(SeqFSTError):
    """A step of the constructive proof could not be carried out.

    Carries the name of the lemma whose conclusion failed, so callers can
    report which step broke.
    """

    def __init__(self, lemma, message):
        self.lemma = lemma
        super().__init__("%s: %s" % (lemma, message))


class InternalConsistencyError(LemmaViolation):
    pass
