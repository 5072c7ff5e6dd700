"""
Half-twists, frames of B_3 and the Delta^2 factorizations they spell.

A half-twist is stored by a conjugate presentation ``w sigma_i w^-1``. Its
surrogate length is the least conjugator length over all presentations of the
same element, computed exactly by a breadth-first search of the conjugation
graph rooted at the standard generators (shared per strand count and grown on
demand).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

from . import artin
from .artin import ActionImage
from .braid import BraidError, BraidWord, compose, conjugate, free_reduce, parse_word
from .hurwitz import Factorization


class FrameError(BraidError):
    pass


@dataclass(frozen=True)
class HalfTwist:
    conjugator: BraidWord
    base: int

    def __post_init__(self):
        if not 1 <= self.base <= self.conjugator.n - 1:
            raise BraidError(f"base index {self.base} out of range for B_{self.conjugator.n}")

    @classmethod
    def standard(cls, n: int, i: int) -> HalfTwist:
        return cls(BraidWord.identity(n), i)

    @property
    def n(self) -> int:
        return self.conjugator.n

    @cached_property
    def word(self) -> BraidWord:
        return conjugate(self.conjugator, BraidWord.generator(self.n, self.base))

    @cached_property
    def key(self) -> ActionImage:
        return artin.canonical_key(self.word)

    def conjugated(self, g: BraidWord) -> HalfTwist:
        """``g h g^-1`` with conjugator ``g w``."""
        return HalfTwist(compose(g, self.conjugator), self.base)

    def __str__(self) -> str:
        return f"[{' '.join(map(str, self.conjugator.letters))} | {self.base}]"


class ConjugationBall:
    """Conjugates of standard generators, layered by least conjugator length.

    Layer d holds every half-twist whose shortest presentation has a
    conjugator of exactly d letters, together with one such presentation.
    """

    def __init__(self, n: int):
        self.n = n
        self.found: dict[ActionImage, tuple[int, tuple[int, ...], int]] = {}
        self.frontier: list[tuple[ActionImage, tuple[int, ...], int]] = []
        for i in range(1, n):
            k = artin.canonical_key(BraidWord.generator(n, i))
            if k not in self.found:
                self.found[k] = (0, (), i)
                self.frontier.append((k, (), i))
        self.depth = 0
        self._letters = [x for i in range(1, n) for x in (i, -i)]

    def grow(self) -> None:
        nxt = []
        for key, w, i in self.frontier:
            for x in self._letters:
                nk = artin.compose_images(
                    artin.compose_images(artin.letter_image(self.n, x), key),
                    artin.letter_image(self.n, -x),
                )
                if nk in self.found:
                    continue
                nw = free_reduce((x,) + w)
                self.found[nk] = (self.depth + 1, nw, i)
                nxt.append((nk, nw, i))
        self.depth += 1
        self.frontier = nxt

    def locate(self, key: ActionImage, bound: int) -> tuple[int, tuple[int, ...], int] | None:
        """Shortest presentation of the element with this key, if within ``bound``."""
        while key not in self.found and self.depth < bound and self.frontier:
            self.grow()
        hit = self.found.get(key)
        if hit is None or hit[0] > bound:
            return None
        return hit


@lru_cache(maxsize=None)
def conjugation_ball(n: int) -> ConjugationBall:
    return ConjugationBall(n)


def surrogate_length(h: HalfTwist, bound: int | None = None) -> int | None:
    """Least conjugator length among presentations of ``h``.

    The search never goes past ``bound`` (default: the length of the given
    conjugator, which is always an upper bound); None means the least length
    exceeds the bound.
    """
    cap = len(h.conjugator) if bound is None else min(bound, len(h.conjugator))
    hit = conjugation_ball(h.n).locate(h.key, cap)
    return None if hit is None else hit[0]


def normalize(h: HalfTwist) -> HalfTwist:
    """An equal half-twist with a shortest conjugator."""
    hit = conjugation_ball(h.n).locate(h.key, len(h.conjugator))
    if hit is None:
        raise AssertionError(f"{h} not found within its own conjugator length")
    _, w, i = hit
    return HalfTwist(BraidWord(h.n, w), i)


@lru_cache(maxsize=None)
def delta_squared(n: int) -> BraidWord:
    if n < 2:
        raise BraidError("n must be >= 2")
    return BraidWord(n, tuple(range(1, n)) * n)


def _delta_key(n: int) -> ActionImage:
    return artin.canonical_key(delta_squared(n))


@dataclass(frozen=True)
class Frame:
    h1: HalfTwist
    h2: HalfTwist

    @property
    def n(self) -> int:
        return self.h1.n

    def pair(self, i: int) -> HalfTwist:
        return self.h1 if i == 1 else self.h2

    def is_frame(self) -> bool:
        """The checkable necessary conditions: triple relation and (h1 h2)^3 = Delta^2.

        Generation of B_3 is not checked.
        """
        if self.h1.n != 3 or self.h2.n != 3:
            return False
        a, b = self.h1.word, self.h2.word
        if not artin.braids_equal(compose(a, b, a), compose(b, a, b)):
            return False
        return artin.canonical_key(compose(a, b, a, b, a, b)) == _delta_key(3)

    def validate(self) -> Frame:
        if not self.is_frame():
            raise FrameError(f"({self.h1}, {self.h2}) fails the frame relations")
        return self

    def conjugated(self, g: BraidWord) -> Frame:
        return Frame(self.h1.conjugated(g), self.h2.conjugated(g))

    def normalized(self) -> Frame:
        return Frame(normalize(self.h1), normalize(self.h2))

    def surrogate(self) -> tuple[int, int]:
        return surrogate_length(self.h1), surrogate_length(self.h2)

    @property
    def key(self) -> tuple[ActionImage, ActionImage]:
        return self.h1.key, self.h2.key

    def is_standard(self) -> bool:
        return self.key == standard_frame().key

    def __str__(self) -> str:
        return f"Frame({self.h1}, {self.h2})"


@lru_cache(maxsize=None)
def standard_frame() -> Frame:
    return Frame(HalfTwist.standard(3, 1), HalfTwist.standard(3, 2))


def conjugate_frame(f: Frame, g: BraidWord) -> Frame:
    return f.conjugated(g)


def frame_factorization(f: Frame) -> Factorization:
    f.validate()
    return Factorization(3, (f.h1.word, f.h2.word) * 3)


@lru_cache(maxsize=None)
def delta_patterns() -> tuple[tuple[int, ...], ...]:
    """All index patterns in {1,2}^6 whose positive word equals Delta_3^2."""
    target = _delta_key(3)
    return tuple(
        p for p in itertools.product((1, 2), repeat=6)
        if artin.canonical_key(BraidWord(3, p)) == target
    )


def is_delta_pattern(pattern) -> bool:
    return tuple(pattern) in delta_patterns()


def word_factorization(f: Frame, pattern) -> Factorization:
    pattern = tuple(pattern)
    if len(pattern) != 6 or any(i not in (1, 2) for i in pattern):
        raise FrameError(f"pattern must be six indices in {{1,2}}, got {pattern}")
    if not is_delta_pattern(pattern):
        raise FrameError(f"not a Delta^2 factorization: {' '.join(map(str, pattern))}")
    f.validate()
    return Factorization(3, tuple(f.pair(i).word for i in pattern))


def parse_half_twist(text: str, base: int, n: int = 3) -> HalfTwist:
    return HalfTwist(parse_word(text, n), base)
