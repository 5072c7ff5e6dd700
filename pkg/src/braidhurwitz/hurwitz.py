"""
The Hurwitz action of B_m on m-tuples of braids.

The forward move R_k (0-based k) replaces the adjacent pair (t_k, t_{k+1}) by
(t_k t_{k+1} t_k^-1, t_k); the backward move R_k^-1 is its inverse and sends
(t_k, t_{k+1}) to (t_{k+1}, t_{k+1}^-1 t_k t_{k+1}). Sequences are applied
left to right.

Two representations of a tuple are used. :class:`Factorization` holds braid
words and is what users build and read. Long move sequences make those words
grow without bound, so searches and certificate replay run on
:data:`ImageTuple` values instead: each factor is the pair (action image,
action image of the inverse), and a move is computed by composing images. The
size of an image depends only on the group element, not on how it was spelled.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from . import artin
from .artin import ActionImage
from .braid import BraidError, BraidWord, compose, inverse, parse_word, format_word


class MoveError(ValueError):
    pass


class HurwitzMove(NamedTuple):
    k: int
    forward: bool = True

    def inverse(self) -> HurwitzMove:
        return HurwitzMove(self.k, not self.forward)

    def __str__(self) -> str:
        return f"{'R' if self.forward else 'r'}{self.k}"


MoveSequence = tuple[HurwitzMove, ...]


def R(k: int) -> HurwitzMove:
    return HurwitzMove(k, True)


def Rinv(k: int) -> HurwitzMove:
    return HurwitzMove(k, False)


def format_moves(seq: Iterable[HurwitzMove]) -> str:
    return " ".join(str(mv) for mv in seq)


def parse_moves(text: str) -> MoveSequence:
    """Parse tokens like ``"R3 r0 R1"``."""
    out = []
    for tok in text.split():
        if len(tok) < 2 or tok[0] not in "Rr" or not tok[1:].isdigit():
            raise MoveError(f"malformed move token {tok!r}")
        out.append(HurwitzMove(int(tok[1:]), tok[0] == "R"))
    return tuple(out)


def invert_moves(seq: Sequence[HurwitzMove]) -> MoveSequence:
    return tuple(mv.inverse() for mv in reversed(seq))


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[BraidWord, ...]
    product: BraidWord = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise BraidError("a factorization needs at least one factor")
        for w in factors:
            if w.n != self.n:
                raise BraidError(f"factor {w} is not in B_{self.n}")
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "product", compose(*factors))

    @classmethod
    def from_words(cls, n: int, words: Iterable[str | Sequence[int]]) -> Factorization:
        factors = []
        for w in words:
            factors.append(parse_word(w, n) if isinstance(w, str) else BraidWord(n, tuple(w)))
        return cls(n, tuple(factors))

    @property
    def m(self) -> int:
        return len(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return " . ".join(f"({format_word(w)})" for w in self.factors)


def apply_move(f: Factorization, mv: HurwitzMove) -> Factorization:
    k = mv.k
    if not 0 <= k <= f.m - 2:
        raise MoveError(f"move {mv} out of range for a {f.m}-tuple")
    t = list(f.factors)
    a, b = t[k], t[k + 1]
    if mv.forward:
        t[k], t[k + 1] = compose(a, b, inverse(a)), a
    else:
        t[k], t[k + 1] = b, compose(inverse(b), a, b)
    return Factorization(f.n, tuple(t))


def apply_sequence(f: Factorization, seq: Iterable[HurwitzMove]) -> Factorization:
    for i, mv in enumerate(seq):
        try:
            f = apply_move(f, mv)
        except MoveError as exc:
            raise MoveError(f"step {i}: {exc}") from None
    return f


FactorizationKey = tuple[ActionImage, ...]


def canonical_key(f: Factorization) -> FactorizationKey:
    return tuple(artin.canonical_key(w) for w in f.factors)


def serialize_key(key: FactorizationKey) -> str:
    return " ; ".join(artin.serialize_image(img) for img in key)


def key_digest(key: FactorizationKey) -> str:
    return artin.digest(serialize_key(key))


def equivalent_componentwise(f1: Factorization, f2: Factorization) -> bool:
    return f1.n == f2.n and canonical_key(f1) == canonical_key(f2)


# --- image-level tuples ------------------------------------------------------

ImageFactor = tuple[ActionImage, ActionImage]
ImageTuple = tuple[ImageFactor, ...]


def image_tuple(f: Factorization) -> ImageTuple:
    return tuple((artin.canonical_key(w), artin.canonical_key(inverse(w))) for w in f.factors)


def image_key(state: ImageTuple) -> FactorizationKey:
    return tuple(img for img, _ in state)


def image_product(state: ImageTuple) -> ActionImage:
    out = state[0][0]
    for img, _ in state[1:]:
        out = artin.compose_images(out, img)
    return out


def _conj(a: ImageFactor, b: ImageFactor) -> ImageFactor:
    """``a b a^-1`` as an image pair."""
    img = artin.compose_images(artin.compose_images(a[0], b[0]), a[1])
    inv = artin.compose_images(artin.compose_images(a[0], b[1]), a[1])
    return img, inv


def move_images(state: ImageTuple, mv: HurwitzMove) -> ImageTuple:
    k = mv.k
    if not 0 <= k <= len(state) - 2:
        raise MoveError(f"move {mv} out of range for a {len(state)}-tuple")
    a, b = state[k], state[k + 1]
    if mv.forward:
        pair = (_conj(a, b), a)
    else:
        pair = (b, _conj((b[1], b[0]), a))
    return state[:k] + pair + state[k + 2:]


def replay_images(state: ImageTuple, seq: Iterable[HurwitzMove]) -> ImageTuple:
    for i, mv in enumerate(seq):
        try:
            state = move_images(state, mv)
        except MoveError as exc:
            raise MoveError(f"step {i}: {exc}") from None
    return state


def replay_key(f: Factorization, seq: Iterable[HurwitzMove]) -> FactorizationKey:
    """Canonical key of ``apply_sequence(f, seq)``, computed on images."""
    return image_key(replay_images(image_tuple(f), seq))


def all_moves(m: int) -> list[HurwitzMove]:
    return [HurwitzMove(k, fwd) for k in range(m - 1) for fwd in (True, False)]


# --- orbit search ------------------------------------------------------------

@dataclass
class OrbitReport:
    root: FactorizationKey
    parents: dict[FactorizationKey, tuple[FactorizationKey, HurwitzMove] | None]
    exhausted: bool

    @property
    def size(self) -> int:
        return len(self.parents)

    def __contains__(self, key: FactorizationKey) -> bool:
        return key in self.parents

    def path_to(self, key: FactorizationKey) -> MoveSequence:
        """Moves carrying the root to ``key`` along the spanning tree."""
        if key not in self.parents:
            raise KeyError("state not in the explored orbit")
        moves = []
        while (entry := self.parents[key]) is not None:
            key, mv = entry
            moves.append(mv)
        return tuple(reversed(moves))


def orbit_bfs(f: Factorization, node_budget: int = 100_000) -> OrbitReport:
    """Breadth-first enumeration of the Hurwitz orbit of ``f``.

    States are keyed by their canonical key, so distinct spellings of the same
    tuple are never visited twice. Each layer is expanded in sorted key order,
    making the spanning tree reproducible. ``exhausted`` is True when the
    budget stopped the search before the orbit was closed.
    """
    if node_budget < 1:
        raise ValueError("node_budget must be >= 1")
    start = image_tuple(f)
    root = image_key(start)
    parents: dict = {root: None}
    layer = [(root, start)]
    moves = all_moves(f.m)
    while layer:
        nxt = []
        for key, state in layer:
            for mv in moves:
                new = move_images(state, mv)
                nk = image_key(new)
                if nk in parents:
                    continue
                if len(parents) >= node_budget:
                    return OrbitReport(root, parents, True)
                parents[nk] = (key, mv)
                nxt.append((nk, new))
        nxt.sort(key=lambda item: item[0])
        layer = nxt
    return OrbitReport(root, parents, False)


@dataclass
class PathResult:
    moves: MoveSequence | None
    exhausted: bool = False
    reason: str = ""
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.moves is not None


def find_path(f1: Factorization, f2: Factorization, node_budget: int = 100_000) -> PathResult:
    """Bidirectional BFS for a move sequence carrying ``f1`` to ``f2``.

    A result with ``found`` False and ``exhausted`` False proves that the two
    tuples are not Hurwitz equivalent (one side's whole orbit was enumerated).
    """
    if f1.n != f2.n or f1.m != f2.m:
        raise BraidError(f"cannot connect tuples of shape B_{f1.n}^{f1.m} and B_{f2.n}^{f2.m}")
    s1, s2 = image_tuple(f1), image_tuple(f2)
    if image_product(s1) != image_product(s2):
        return PathResult(None, False, "product mismatch")
    k1, k2 = image_key(s1), image_key(s2)
    if k1 == k2:
        return PathResult((), False, "", 1)

    moves = all_moves(f1.m)
    sides = [
        {"parents": {k1: None}, "layer": [(k1, s1)]},
        {"parents": {k2: None}, "layer": [(k2, s2)]},
    ]

    def trace(parents, key):
        out = []
        while (entry := parents[key]) is not None:
            key, mv = entry
            out.append(mv)
        return tuple(reversed(out))

    while sides[0]["layer"] and sides[1]["layer"]:
        # expand the side with the smaller frontier; ties go to the forward side
        i = 0 if len(sides[0]["layer"]) <= len(sides[1]["layer"]) else 1
        this, other = sides[i], sides[1 - i]
        nxt = []
        for key, state in this["layer"]:
            for mv in moves:
                new = move_images(state, mv)
                nk = image_key(new)
                if nk in this["parents"]:
                    continue
                this["parents"][nk] = (key, mv)
                if nk in other["parents"]:
                    p_this = trace(this["parents"], nk)
                    p_other = trace(other["parents"], nk)
                    if i == 0:
                        path = p_this + invert_moves(p_other)
                    else:
                        path = p_other + invert_moves(p_this)
                    nodes = len(this["parents"]) + len(other["parents"])
                    if image_key(replay_images(s1, path)) != k2:
                        raise AssertionError("bidirectional search produced a path that fails replay")
                    return PathResult(path, False, "", nodes)
                if len(this["parents"]) + len(other["parents"]) >= node_budget:
                    return PathResult(None, True, "budget exhausted",
                                      len(this["parents"]) + len(other["parents"]))
                nxt.append((nk, new))
        nxt.sort(key=lambda item: item[0])
        this["layer"] = nxt
    nodes = len(sides[0]["parents"]) + len(sides[1]["parents"])
    return PathResult(None, False, "orbits are disjoint", nodes)
