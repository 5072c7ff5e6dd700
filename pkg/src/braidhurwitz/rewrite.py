"""
Rewriting of positive braid words by single relation applications.

Two equal positive words are connected by a chain of positive words, each
obtained from the previous one by one commutation (``a b -> b a`` with
``|a - b| > 1``) or one triple move (``a b a -> b a b`` with ``|a - b| = 1``).
The connected component of a word under these moves is finite (length and
letter sum are invariant), so a search either finds a chain or proves the two
words unequal.

Relation chains translate into Hurwitz moves on the tuple of factors spelled
by the word: a commutation at position p is R_p, a triple move at position p is
R_{p+1} followed by R_p.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence

from .braid import BraidError
from .hurwitz import HurwitzMove, MoveSequence, R


class Kind(Enum):
    COMMUTE = "C"
    TRIPLE_LR = "T+"  # a, a+1, a -> a+1, a, a+1
    TRIPLE_RL = "T-"  # a+1, a, a+1 -> a, a+1, a


class RelationMove(NamedTuple):
    kind: Kind
    position: int

    def __str__(self) -> str:
        return f"{self.kind.value}@{self.position}"


PositiveWord = tuple[int, ...]

# Hurwitz moves realising one relation application at offset 0, validated by
# replay in the test suite; see ``relation_path_to_hurwitz``.
COMMUTE_TEMPLATE: tuple[HurwitzMove, ...] = (R(0),)
TRIPLE_TEMPLATE: tuple[HurwitzMove, ...] = (R(1), R(0))


def parse_relation_moves(text: str) -> tuple[RelationMove, ...]:
    out = []
    for tok in text.split():
        head, sep, pos = tok.partition("@")
        try:
            out.append(RelationMove(Kind(head), int(pos)))
        except ValueError:
            raise BraidError(f"malformed relation move {tok!r}") from None
        if not sep or out[-1].position < 0:
            raise BraidError(f"malformed relation move {tok!r}")
    return tuple(out)


def format_relation_moves(path: Sequence[RelationMove]) -> str:
    return " ".join(str(mv) for mv in path)


def neighbors(w: Sequence[int]) -> list[tuple[RelationMove, PositiveWord]]:
    """All words one relation application away from the positive word ``w``."""
    w = tuple(w)
    out = []
    for p in range(len(w) - 1):
        a, b = w[p], w[p + 1]
        if abs(a - b) > 1:
            out.append((RelationMove(Kind.COMMUTE, p), w[:p] + (b, a) + w[p + 2:]))
        if p + 2 < len(w) and w[p + 2] == a and abs(a - b) == 1:
            kind = Kind.TRIPLE_LR if b == a + 1 else Kind.TRIPLE_RL
            out.append((RelationMove(kind, p), w[:p] + (b, a, b) + w[p + 3:]))
    return out


def apply_relation(w: Sequence[int], mv: RelationMove) -> PositiveWord:
    w = tuple(w)
    p = mv.position
    if mv.kind is Kind.COMMUTE:
        if p + 1 >= len(w) or abs(w[p] - w[p + 1]) <= 1:
            raise BraidError(f"{mv} does not apply to {w}")
        return w[:p] + (w[p + 1], w[p]) + w[p + 2:]
    if p + 2 >= len(w):
        raise BraidError(f"{mv} does not apply to {w}")
    a, b, c = w[p:p + 3]
    want = 1 if mv.kind is Kind.TRIPLE_LR else -1
    if a != c or b - a != want:
        raise BraidError(f"{mv} does not apply to {w}")
    return w[:p] + (b, a, b) + w[p + 3:]


def replay_relations(w: Sequence[int], path: Sequence[RelationMove]) -> PositiveWord:
    w = tuple(w)
    for i, mv in enumerate(path):
        try:
            w = apply_relation(w, mv)
        except BraidError as exc:
            raise BraidError(f"step {i}: {exc}") from None
    return w


@dataclass
class RelationPath:
    moves: tuple[RelationMove, ...] | None
    exhausted: bool = False
    visited: int = 0

    @property
    def connected(self) -> bool:
        return self.moves is not None


def _reverse_move(mv: RelationMove) -> RelationMove:
    flip = {Kind.COMMUTE: Kind.COMMUTE, Kind.TRIPLE_LR: Kind.TRIPLE_RL, Kind.TRIPLE_RL: Kind.TRIPLE_LR}
    return RelationMove(flip[mv.kind], mv.position)


def find_relation_path(w1: Sequence[int], w2: Sequence[int], budget: int = 1_000_000) -> RelationPath:
    """Bidirectional BFS between two positive words.

    Returns a path that replays ``w1`` into ``w2`` letter for letter. When no
    path exists and ``exhausted`` is False, the component of one endpoint was
    searched completely and the words are unequal in the braid group.
    """
    w1, w2 = tuple(w1), tuple(w2)
    if any(x <= 0 for x in w1 + w2):
        raise BraidError("relation search needs positive words")
    if len(w1) != len(w2):
        return RelationPath(None, False, 0)
    if w1 == w2:
        return RelationPath((), False, 1)

    fwd = {w1: None}
    bwd = {w2: None}
    fl, bl = [w1], [w2]

    def trace(parents, w):
        out = []
        while (entry := parents[w]) is not None:
            w, mv = entry
            out.append(mv)
        return out[::-1]

    while fl and bl:
        forward = len(fl) <= len(bl)
        this, other = (fwd, bwd) if forward else (bwd, fwd)
        layer = fl if forward else bl
        nxt = []
        for w in layer:
            for mv, u in neighbors(w):
                if u in this:
                    continue
                this[u] = (w, mv)
                if u in other:
                    a, b = trace(this, u), trace(other, u)
                    if not forward:
                        a, b = b, a
                    path = tuple(a) + tuple(_reverse_move(mv) for mv in reversed(b))
                    if replay_relations(w1, path) != w2:
                        raise AssertionError("relation search produced a path that fails replay")
                    return RelationPath(path, False, len(fwd) + len(bwd))
                if len(fwd) + len(bwd) >= budget:
                    return RelationPath(None, True, len(fwd) + len(bwd))
                nxt.append(u)
        nxt.sort()
        if forward:
            fl = nxt
        else:
            bl = nxt
    return RelationPath(None, False, len(fwd) + len(bwd))


def relation_path_to_hurwitz(path: Sequence[RelationMove], start: Sequence[int] | None = None) -> MoveSequence:
    """Translate a relation chain into Hurwitz moves.

    If ``start`` is given the chain is replayed on it first, and an invalid
    step raises :class:`BraidError` naming the step.
    """
    if start is not None:
        replay_relations(start, path)
    out: list[HurwitzMove] = []
    for mv in path:
        template = COMMUTE_TEMPLATE if mv.kind is Kind.COMMUTE else TRIPLE_TEMPLATE
        out.extend(HurwitzMove(h.k + mv.position, h.forward) for h in template)
    return tuple(out)
