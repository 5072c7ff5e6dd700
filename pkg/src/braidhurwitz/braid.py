"""
Words in the Artin generators of the braid group B_n.

A letter is a nonzero signed integer: ``i`` stands for the generator sigma_i and
``-i`` for its inverse, with 1 <= i <= n - 1. Words are kept freely reduced and
are otherwise not normalised; deciding equality of braids is the job of
:mod:`braidhurwitz.artin`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class BraidError(ValueError):
    """Raised on malformed words or mismatched strand counts."""


class ParseError(BraidError):
    pass


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Cancel adjacent ``x, -x`` pairs until none remain.

    Works for braid letters and free group letters alike, since both use the
    signed-integer encoding.
    """
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise BraidError(f"strand count must be >= 2, got {self.n}")
        letters = tuple(self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.n - 1:
                raise BraidError(f"letter {x} out of range for B_{self.n}")
        object.__setattr__(self, "letters", free_reduce(letters))

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n, ())

    @classmethod
    def generator(cls, n: int, i: int) -> BraidWord:
        return cls(n, (i,))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def inverse(self) -> BraidWord:
        return inverse(self)

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    def __str__(self) -> str:
        return format_word(self)


def _check_same_n(*words: BraidWord) -> int:
    n = words[0].n
    for w in words[1:]:
        if w.n != n:
            raise BraidError(f"strand count mismatch: B_{n} vs B_{w.n}")
    return n


def compose(*words: BraidWord) -> BraidWord:
    """Product of the given words, read left to right."""
    if not words:
        raise BraidError("compose needs at least one word")
    n = _check_same_n(*words)
    out: list[int] = []
    for w in words:
        out.extend(w.letters)
    return BraidWord(n, tuple(out))


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(-x for x in reversed(w.letters)))


def conjugate(g: BraidWord, h: BraidWord) -> BraidWord:
    """``g h g^-1``."""
    return compose(g, h, inverse(g))


def parse_word(text: str, n: int) -> BraidWord:
    """Parse whitespace-separated signed integers, e.g. ``"1 2 -1"``."""
    letters = []
    for tok in text.split():
        try:
            x = int(tok)
        except ValueError:
            raise ParseError(f"malformed token {tok!r}") from None
        if x == 0:
            raise ParseError(f"token {tok!r}: generator index 0 is not allowed")
        if abs(x) > n - 1:
            raise ParseError(f"token {tok!r}: index out of range for B_{n} (1..{n - 1})")
        letters.append(x)
    return BraidWord(n, tuple(letters))


def format_word(w: BraidWord | Sequence[int]) -> str:
    letters = w.letters if isinstance(w, BraidWord) else w
    return " ".join(str(x) for x in letters)
