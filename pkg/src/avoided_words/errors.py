"""Exception types shared across the package."""


class AvoidedWordsError(Exception):
    """Base class for errors raised by this package."""


class InputError(AvoidedWordsError):
    """Malformed or rejected input data (FASTA records, symbols, files)."""


class InternalConsistencyError(AvoidedWordsError):
    """The index and a derived structure disagree; aborts the sequence."""
