"""Binary pattern and dataset representations, plus text ingestion.

A pattern is an ordered vector (x_1, ..., x_L) of bits. The leftmost
character of a text pattern is x_1, and internally bit l-1 of the packed
word holds x_l, so L <= 64 patterns fit one machine word.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    EmptyDataset,
    EmptyInput,
    IllegalCharacter,
    IndexOutOfRange,
    LengthMismatch,
    LengthOutOfRange,
    RaggedLengths,
)

MAX_LENGTH = 64


@dataclass(frozen=True)
class BitPattern:
    """An immutable L-bit binary vector, 1 <= L <= 64."""

    bits: tuple[int, ...]
    word: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        length = len(self.bits)
        if not 1 <= length <= MAX_LENGTH:
            raise LengthOutOfRange(f"pattern length {length} outside 1..{MAX_LENGTH}")
        word = 0
        for position, bit in enumerate(self.bits):
            if bit not in (0, 1):
                raise IllegalCharacter(f"bit value {bit!r} is not 0 or 1")
            word |= bit << position
        object.__setattr__(self, "word", word)

    @property
    def length(self) -> int:
        return len(self.bits)

    @classmethod
    def from_word(cls, word: int, length: int) -> BitPattern:
        """Unpack an integer whose bit l-1 is x_l."""
        if not 1 <= length <= MAX_LENGTH:
            raise LengthOutOfRange(f"pattern length {length} outside 1..{MAX_LENGTH}")
        if word < 0 or word >> length:
            raise ValueError(f"word {word} does not fit in {length} bits")
        return cls(tuple((word >> position) & 1 for position in range(length)))

    def __str__(self) -> str:
        return render_pattern(self)


@dataclass(frozen=True)
class Dataset:
    """N prototype patterns of a common length. Duplicates carry weight."""

    patterns: tuple[BitPattern, ...]

    def __post_init__(self) -> None:
        if not self.patterns:
            raise EmptyDataset("a dataset needs at least one pattern")
        length = self.patterns[0].length
        for pattern in self.patterns:
            if pattern.length != length:
                raise RaggedLengths(
                    f"mixed pattern lengths {length} and {pattern.length}"
                )
        # Word -> multiplicity map; backs the O(1) counting estimator.
        counts = Counter(pattern.word for pattern in self.patterns)
        object.__setattr__(self, "_counts", dict(counts))

    @property
    def length(self) -> int:
        return self.patterns[0].length

    @property
    def size(self) -> int:
        return len(self.patterns)

    @property
    def counts(self) -> dict[int, int]:
        return self._counts  # type: ignore[attr-defined]

    def __iter__(self) -> Iterator[BitPattern]:
        return iter(self.patterns)


def parse_pattern(text: str, expected_length: int | None = None) -> BitPattern:
    """Parse '0'/'1' text (commas optional) into a BitPattern."""
    stripped = text.strip()
    digits = []
    for char in stripped:
        if char in "01":
            digits.append(int(char))
        elif char == ",":
            continue
        elif char.isspace():
            continue
        else:
            raise IllegalCharacter(f"illegal character {char!r} in pattern {text!r}")
    if not digits:
        raise EmptyInput("pattern text contains no digits")
    if len(digits) > MAX_LENGTH:
        raise LengthOutOfRange(f"pattern length {len(digits)} exceeds {MAX_LENGTH}")
    if expected_length is not None and len(digits) != expected_length:
        raise LengthMismatch(
            f"pattern {text!r} has length {len(digits)}, expected {expected_length}"
        )
    return BitPattern(tuple(digits))


def render_pattern(pattern: BitPattern) -> str:
    """Inverse of parse_pattern: x_1 becomes the leftmost character."""
    return "".join(str(bit) for bit in pattern.bits)


def load_dataset(lines: Iterable[str]) -> Dataset:
    """Read one pattern per nonblank line; '#' lines are comments.

    Accepts any iterable of strings, e.g. an open text file or
    ``text.splitlines()``. Raises with the offending line number on bad
    input and RaggedLengths on mixed pattern lengths.
    """
    patterns: list[BitPattern] = []
    length: int | None = None
    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            pattern = parse_pattern(line, expected_length=length)
        except LengthMismatch as exc:
            raise RaggedLengths(f"line {line_number}: {exc}") from exc
        except (EmptyInput, IllegalCharacter, LengthOutOfRange) as exc:
            raise type(exc)(f"line {line_number}: {exc}") from exc
        if length is None:
            length = pattern.length
        patterns.append(pattern)
    if not patterns:
        raise EmptyDataset("no pattern lines in input")
    return Dataset(tuple(patterns))


def signed_value(pattern: BitPattern, index: int) -> int:
    """Return 2*x_l - 1 for the 1-based coordinate l."""
    if not 1 <= index <= pattern.length:
        raise IndexOutOfRange(f"index {index} outside 1..{pattern.length}")
    return 2 * pattern.bits[index - 1] - 1


def all_patterns(length: int) -> Iterator[BitPattern]:
    """Enumerate {0,1}^L in word order. Caller is responsible for caps."""
    for word in range(1 << length):
        yield BitPattern.from_word(word, length)


def dataset_from_words(words: Sequence[int], length: int) -> Dataset:
    return Dataset(tuple(BitPattern.from_word(word, length) for word in words))
