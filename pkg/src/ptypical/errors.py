"""Exception types shared across the package."""


class PtypicalError(Exception):
    """Base class for library errors."""


class PrecisionExhausted(PtypicalError):
    """A computation needs series terms beyond the known precision window."""


class InstanceTooLarge(PtypicalError):
    """A brute-force search was refused by its size guard."""
