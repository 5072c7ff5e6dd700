"""
Braid equality via the Artin action on the free group F_n = <x_1, ..., x_n>.

Free words use the same signed-integer encoding as braid words (``j`` is x_j,
``-j`` its inverse). The generator sigma_i acts by

    x_i     -> x_i x_{i+1} x_i^-1
    x_{i+1} -> x_i

and sigma_i^-1 by

    x_i     -> x_{i+1}
    x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}

fixing every other x_j. Words act left to right: the first letter is applied
first, so ``act(a * b, fw) == act(b, act(a, fw))``.

The action is faithful, so the tuple of images of x_1..x_n (an
:data:`ActionImage`) is a complete invariant of the braid and serves both as
hash key and as equality certificate.
"""

from __future__ import annotations

import hashlib
from functools import lru_cache
from typing import Sequence

from .braid import BraidError, BraidWord, free_reduce

FreeWord = tuple[int, ...]
ActionImage = tuple[FreeWord, ...]


@lru_cache(maxsize=None)
def identity_image(n: int) -> ActionImage:
    return tuple((j,) for j in range(1, n + 1))


@lru_cache(maxsize=None)
def letter_image(n: int, letter: int) -> ActionImage:
    """Images of x_1..x_n under a single generator or inverse generator."""
    i = abs(letter)
    if not 1 <= i <= n - 1:
        raise BraidError(f"letter {letter} out of range for B_{n}")
    images = list(identity_image(n))
    if letter > 0:
        images[i - 1] = (i, i + 1, -i)
        images[i] = (i,)
    else:
        images[i - 1] = (i + 1,)
        images[i] = (-(i + 1), i, i + 1)
    return tuple(images)


def substitute(images: ActionImage, fw: Sequence[int]) -> FreeWord:
    """Apply the endomorphism ``x_j -> images[j-1]`` to a free word."""
    inv = [None] * len(images)
    out: list[int] = []
    for x in fw:
        if x > 0:
            img = images[x - 1]
        else:
            img = inv[-x - 1]
            if img is None:
                img = inv[-x - 1] = _inverse_free(images[-x - 1])
        # images are reduced, so cancellation only happens at the junction
        j, k = 0, len(img)
        while j < k and out and out[-1] == -img[j]:
            out.pop()
            j += 1
        out.extend(img[j:] if j else img)
    return tuple(out)


def _inverse_free(fw: FreeWord) -> FreeWord:
    return tuple(-x for x in reversed(fw))


def inverse_free(fw: Sequence[int]) -> FreeWord:
    return _inverse_free(tuple(fw))


def act_letter(letter: int, fw: Sequence[int], n: int) -> FreeWord:
    return substitute(letter_image(n, letter), fw)


def act(w: BraidWord, fw: Sequence[int]) -> FreeWord:
    out = free_reduce(fw)
    for letter in w.letters:
        out = substitute(letter_image(w.n, letter), out)
    return out


def compose_images(first: ActionImage, second: ActionImage) -> ActionImage:
    """Image of the product ``a * b`` given the images of ``a`` then ``b``."""
    return tuple(substitute(second, fw) for fw in first)


@lru_cache(maxsize=1 << 16)
def _key_cached(n: int, letters: tuple[int, ...]) -> ActionImage:
    return tuple(act(BraidWord(n, letters), (j,)) for j in range(1, n + 1))


def canonical_key(w: BraidWord) -> ActionImage:
    return _key_cached(w.n, w.letters)


def braids_equal(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.n != w2.n:
        raise BraidError(f"strand count mismatch: B_{w1.n} vs B_{w2.n}")
    return canonical_key(w1) == canonical_key(w2)


def induced_permutation(image: ActionImage) -> tuple[int, ...]:
    """The permutation pi with ``image[i]`` conjugate to x_{pi(i)} (1-based).

    Raises ValueError when some image is not a conjugate of a free generator.
    """
    perm = []
    for fw in image:
        k = len(fw)
        if k % 2 == 0:
            raise ValueError(f"{fw} is not a conjugate of a generator")
        mid = k // 2
        if fw[:mid] != _inverse_free(fw[mid + 1:]) or fw[mid] < 0:
            raise ValueError(f"{fw} is not a conjugate of a generator")
        perm.append(fw[mid])
    if sorted(perm) != list(range(1, len(image) + 1)):
        raise ValueError(f"images do not induce a permutation: {perm}")
    return tuple(perm)


def serialize_image(image: ActionImage) -> str:
    return "|".join(" ".join(str(x) for x in fw) for fw in image)


def digest(data: str) -> str:
    return hashlib.sha256(data.encode()).hexdigest()
