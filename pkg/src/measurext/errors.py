"""Exception hierarchy shared by all measurext modules."""


class MeasureExtError(Exception):
    """Base class for every error raised by this package."""


class InputError(MeasureExtError):
    """Malformed or inconsistent input (universe mismatch, unknown member, bad file)."""


class PreconditionError(MeasureExtError):
    """An operation was called outside its stated domain (e.g. infinite total measure)."""


class ResourceLimitError(MeasureExtError):
    """A configured size cap was exceeded; the message names the cap."""


class UndefinedArithmetic(MeasureExtError, ArithmeticError):
    """Arithmetic left the nonnegative extended domain (inf - inf, negative difference)."""
