"""Prepend-only text buffer with end-anchored addressing.

The text is a sequence of user symbols (integer codes >= 1) terminated by a
sentinel symbol (code 0) that sorts below every user symbol.  Characters are
addressed by *end-anchored* indices: index ``i`` names the character ``i``
positions from the end of the text (the sentinel is index 1).  Because new
symbols are only ever added at the front, an end-anchored index keeps naming
the same character forever, which is what lets edge labels and suffix views
survive prepends.

Physically the buffer stores the text reversed (sentinel first), so a prepend
is an amortized O(1) list append and ``char_at`` is a single list access.
"""

from __future__ import annotations

SENTINEL = 0


def byte_to_code(b: int) -> int:
    """Map a byte value 0..255 to a user symbol code (the sentinel keeps 0)."""
    return b + 1


def code_to_byte(code: int) -> int:
    return code - 1


class TextUnderflow(Exception):
    """Raised when popping the front of a text with no user symbols."""


class TextBuffer:
    """The logical text: user symbols plus the terminal sentinel."""

    __slots__ = ("cells", "reads")

    def __init__(self):
        self.cells = [SENTINEL]  # end-to-front order; cells[0] is the sentinel
        self.reads = 0           # char_at probe counter

    @property
    def user_len(self) -> int:
        return len(self.cells) - 1

    def __len__(self) -> int:
        """Total length, sentinel included."""
        return len(self.cells)

    def prepend(self, code: int) -> None:
        """Add one user symbol at the front of the text."""
        if code < 1:
            raise ValueError("user symbols must have code >= 1")
        self.cells.append(code)

    def pop_front(self) -> int:
        """Remove and return the first (most recently prepended) symbol."""
        if len(self.cells) <= 1:
            raise TextUnderflow("text holds no user symbols")
        return self.cells.pop()

    def char_at(self, i: int) -> int:
        """Character ``i`` positions from the text end, 1-based; O(1)."""
        if not 1 <= i <= len(self.cells):
            raise IndexError(f"end-anchored index {i} out of range 1..{len(self.cells)}")
        self.reads += 1
        return self.cells[i - 1]

    def frontwise(self) -> list[int]:
        """The text in natural front-to-end order (sentinel last)."""
        return self.cells[::-1]


class StringView:
    """Random-access view of a string in the endmarker model.

    ``length`` counts one position past the user symbols; ``symbol_at(length)``
    is the string's endmarker, read as code 0.  Two views are the same string
    exactly when their user symbols agree.
    """

    length: int

    def symbol_at(self, i: int) -> int:
        raise NotImplementedError


class PatternView(StringView):
    """View over an explicit sequence of user symbol codes."""

    __slots__ = ("codes", "length", "reads")

    def __init__(self, codes):
        self.codes = list(codes)
        if any(c < 1 for c in self.codes):
            raise ValueError("patterns may contain user symbols only")
        self.length = len(self.codes) + 1
        self.reads = 0

    @classmethod
    def from_bytes(cls, data: bytes) -> "PatternView":
        return cls([byte_to_code(b) for b in data])

    @classmethod
    def from_str(cls, s: str) -> "PatternView":
        return cls.from_bytes(s.encode("latin-1"))

    def symbol_at(self, i: int) -> int:
        self.reads += 1
        if i == self.length:
            return SENTINEL
        return self.codes[i - 1]


class SuffixView(StringView):
    """View of the text suffix of a given length (endmarker included)."""

    __slots__ = ("text", "length")

    def __init__(self, text: TextBuffer, length: int):
        self.text = text
        self.length = length

    def symbol_at(self, i: int) -> int:
        # j-th character of the suffix sits i = length - j + 1 from the end
        return self.text.char_at(self.length - i + 1)
