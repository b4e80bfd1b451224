"""Exception hierarchy shared by every module."""


class SymfError(ValueError):
    """Base class for all library errors."""


class NonPositivePart(SymfError):
    pass


class DegreeCapExceeded(SymfError):
    pass


class SizeCapExceeded(SymfError):
    pass


class MixedBases(SymfError):
    pass


class DegreeMismatch(SymfError):
    pass


class NonIntegralInput(SymfError):
    pass


class BadArity(SymfError):
    pass


class NotSymmetric(SymfError):
    pass


class DegreeExceedsVariables(SymfError):
    pass


class NotHomogeneous(SymfError):
    pass


class NonIntegralMultiplicity(SymfError):
    pass


class NotAPermutation(SymfError):
    pass


class ParseError(SymfError):
    """Expression syntax error carrying a byte offset and the expected tokens."""

    def __init__(self, offset, expected, message=None):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        if message is None:
            message = "expected one of %s" % ", ".join(self.expected)
        super().__init__("offset %d: %s" % (offset, message))
