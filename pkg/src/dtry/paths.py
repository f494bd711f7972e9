"""Validated names and dotted paths.

A name is a nonempty run of characters from [A-Za-z0-9_]. A path is a
sequence of names, written with ``.`` between segments, for example
``oscillator.mass.momentum``. The empty path is the root; it serializes
as the empty string, and a lone ``.`` is a syntax error (it would denote
two empty segments).

Paths compare lexicographically: segment by segment in byte order, with
a proper prefix sorting before its extensions. Because ``Path`` is a
tuple of names and names are ASCII strings, the built-in tuple ordering
is exactly that order.
"""

from __future__ import annotations

from typing import Iterable

from .errors import BadNameError, BadPathError

__all__ = ["Name", "Path", "lex_cmp", "is_prefix_free"]


class Name(str):
    """A single path segment."""

    __slots__ = ()

    def __new__(cls, text):
        if type(text) is Name:
            return text
        if not isinstance(text, str):
            raise BadNameError(repr(text), 0, "not a string")
        if not text:
            raise BadNameError(text, 0, "name is empty")
        for i, ch in enumerate(text):
            if not (ch.isascii() and (ch.isalnum() or ch == "_")):
                raise BadNameError(text, i, f"invalid character {ch!r}")
        return super().__new__(cls, text)


class Path(tuple):
    """An immutable sequence of names addressing an entry in a directory."""

    __slots__ = ()

    def __new__(cls, segments: str | Iterable[str] = ()):
        if type(segments) is Path:
            return segments
        if isinstance(segments, str):
            return cls.parse(segments)
        return super().__new__(cls, (Name(s) for s in segments))

    @classmethod
    def parse(cls, text: str) -> "Path":
        """Parse dotted-path syntax; the empty string is the root path."""
        if text == "":
            return tuple.__new__(cls, ())
        names = []
        for i, part in enumerate(text.split(".")):
            try:
                names.append(Name(part))
            except BadNameError as exc:
                raise BadPathError(text, i, exc.reason) from exc
        return tuple.__new__(cls, tuple(names))

    def concat(self, other) -> "Path":
        return Path(tuple.__add__(self, Path(other)))

    def __add__(self, other) -> "Path":
        return self.concat(other)

    def is_prefix_of(self, other) -> bool:
        """True when self is an initial segment of other (reflexively)."""
        return len(self) <= len(other) and tuple.__eq__(self, tuple(other[: len(self)]))

    def __str__(self) -> str:
        return ".".join(self)

    def __repr__(self) -> str:
        return f"Path({str(self)!r})"


def lex_cmp(p: Path, q: Path) -> int:
    """Three-way comparison in path order: -1, 0, or 1."""
    p, q = Path(p), Path(q)
    return (p > q) - (p < q)


def is_prefix_free(paths: Iterable[Path]) -> bool:
    """True when no path in the set is a prefix of a distinct one.

    Sorting puts every path right before its extensions, so checking
    adjacent pairs of the sorted, deduplicated set suffices.
    """
    ordered = sorted({Path(p) for p in paths})
    return all(
        not ordered[i].is_prefix_of(ordered[i + 1]) for i in range(len(ordered) - 1)
    )
