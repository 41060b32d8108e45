"""Exception types shared across the package."""
from __future__ import annotations


class DiracPmfError(Exception):
    """Base class for all errors raised by this package."""


class EmptyInput(DiracPmfError, ValueError):
    """A pattern string contained no digits."""


class IllegalCharacter(DiracPmfError, ValueError):
    """A pattern string contained something other than '0', '1' or ','."""


class LengthMismatch(DiracPmfError, ValueError):
    """Two patterns (or a pattern and an expectation) disagree in length."""


class LengthOutOfRange(DiracPmfError, ValueError):
    """Pattern length outside the supported range 1..64."""


class IndexOutOfRange(DiracPmfError, IndexError):
    """A 1-based coordinate index fell outside 1..L."""


class EmptyDataset(DiracPmfError, ValueError):
    """A dataset with zero patterns was supplied where N >= 1 is required."""


class RaggedLengths(DiracPmfError, ValueError):
    """Dataset lines have mixed pattern lengths."""


class CapExceeded(DiracPmfError, ValueError):
    """An exhaustive 2^L enumeration was requested above the configured cap."""


class NotPowerOfTwo(DiracPmfError, ValueError):
    """Transform input length is not a power of two."""


class RangeError(DiracPmfError, ValueError):
    """Combinatorial arguments outside their supported integer range."""
