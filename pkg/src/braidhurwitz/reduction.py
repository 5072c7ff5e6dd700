"""
Descent of frame factorizations to the standard one, and certificates
connecting any two frame-word factorizations of Delta_3^2.

One descent step replaces the frame (h1, h2) by one of its four neighbours

    (h1 h2 h1^-1, h1)   (h1, h1^-1 h2 h1)   (h2, h2^-1 h1 h2)   (h2 h1 h2^-1, h2)

whichever has the smallest maximal surrogate length, provided that maximum
drops. Each neighbour is reached from (h1, h2, h1, h2, h1, h2) by a fixed
template of Hurwitz moves. When no neighbour improves, the step stalls and the
caller falls back on a bidirectional orbit search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from . import artin
from .braid import compose, inverse
from .frames import (
    Frame,
    FrameError,
    HalfTwist,
    frame_factorization,
    normalize,
    standard_frame,
    surrogate_length,
    word_factorization,
)
from .hurwitz import (
    Factorization,
    HurwitzMove,
    MoveSequence,
    R,
    Rinv,
    apply_sequence,
    canonical_key,
    find_path,
    invert_moves,
    key_digest,
    replay_key,
)
from .rewrite import find_relation_path, relation_path_to_hurwitz

STANDARD_PATTERN = (1, 2, 1, 2, 1, 2)

# (h1,h2)^3 -> (h2,h1)^3
CYCLE: MoveSequence = (R(1), R(0), R(4), R(3))
# (a,b)^3 -> (a b a^-1, a)^3
CONJ_FORWARD: MoveSequence = (R(0), R(2), R(4))
# (a,b)^3 -> (b, b^-1 a b)^3
CONJ_BACKWARD: MoveSequence = (Rinv(0), Rinv(2), Rinv(4))


class Direction(Enum):
    H1_H2_H1INV = "h1 h2 h1^-1"
    H1INV_H2_H1 = "h1^-1 h2 h1"
    H2INV_H1_H2 = "h2^-1 h1 h2"
    H2_H1_H2INV = "h2 h1 h2^-1"
    SWAP = "swap"


TEMPLATES: dict[Direction, MoveSequence] = {
    Direction.H1_H2_H1INV: CONJ_FORWARD,
    Direction.H1INV_H2_H1: CYCLE + CONJ_BACKWARD,
    Direction.H2INV_H1_H2: CONJ_BACKWARD,
    Direction.H2_H1_H2INV: CYCLE + CONJ_FORWARD,
    Direction.SWAP: CYCLE,
}


def _conj(a: HalfTwist, b: HalfTwist) -> HalfTwist:
    """``a b a^-1`` as a half-twist presentation."""
    return HalfTwist(compose(a.word, b.conjugator), b.base)


def _conj_inv(a: HalfTwist, b: HalfTwist) -> HalfTwist:
    """``a^-1 b a``."""
    return HalfTwist(compose(inverse(a.word), b.conjugator), b.base)


def neighbour_frame(f: Frame, direction: Direction) -> Frame:
    h1, h2 = f.h1, f.h2
    if direction is Direction.H1_H2_H1INV:
        return Frame(_conj(h1, h2), h1)
    if direction is Direction.H1INV_H2_H1:
        return Frame(h1, _conj_inv(h1, h2))
    if direction is Direction.H2INV_H1_H2:
        return Frame(h2, _conj_inv(h2, h1))
    if direction is Direction.H2_H1_H2INV:
        return Frame(_conj(h2, h1), h2)
    return Frame(h2, h1)


class DescentStalled(Exception):
    def __init__(self, frame: Frame):
        super().__init__(f"no neighbour of {frame} lowers the surrogate length")
        self.frame = frame


class ReductionFailure(Exception):
    def __init__(self, reason: str, frame: Frame | None = None, stage: str = "reduce"):
        super().__init__(f"{stage}: {reason}")
        self.reason = reason
        self.frame = frame
        self.stage = stage


@dataclass
class ReductionStep:
    direction: Direction
    moves: MoveSequence
    old_frame: Frame
    new_frame: Frame

    def verify(self) -> bool:
        """Replay the moves on the old 6-tuple and compare component-wise."""
        got = canonical_key(apply_sequence(frame_factorization(self.old_frame), self.moves))
        return got == canonical_key(frame_factorization(self.new_frame))


def _max_surrogate(f: Frame, cap: int | None = None) -> float:
    out = 0
    for h in (f.h1, f.h2):
        s = surrogate_length(h, cap)
        if s is None:
            return float("inf")
        out = max(out, s)
    return out


def reduce_step(f: Frame) -> ReductionStep | None:
    """One descent step, or None when ``f`` is already the standard frame.

    Raises :class:`DescentStalled` when no neighbour strictly lowers the
    maximal surrogate length.
    """
    f = f.normalized()
    if f.is_standard():
        return None
    current = max(f.surrogate())
    if current == 0:
        # (sigma_2, sigma_1): the only other frame of surrogate length 0
        candidates = [Direction.SWAP]
        cap = 0
    else:
        candidates = [d for d in Direction if d is not Direction.SWAP]
        cap = current - 1
    best = None
    for d in candidates:
        nf = neighbour_frame(f, d)
        score = _max_surrogate(nf, cap)
        if score == float("inf"):
            continue
        nf = nf.normalized()
        rank = (score, artin.serialize_image(nf.h1.key), artin.serialize_image(nf.h2.key))
        if best is None or rank < best[0]:
            best = (rank, d, nf)
    if best is None:
        raise DescentStalled(f)
    _, d, nf = best
    step = ReductionStep(d, TEMPLATES[d], f, nf)
    if not step.verify():
        raise AssertionError(f"template {d.value} failed replay on {f}")
    return step


@dataclass
class Descent:
    moves: MoveSequence
    steps: list[ReductionStep] = field(default_factory=list)
    stalled: bool = False
    fallback_nodes: int = 0


def reduce_to_standard(f: Frame, max_iters: int = 64, node_budget: int = 100_000) -> Descent:
    """Moves carrying ``frame_factorization(f)`` to the standard 6-tuple.

    Raises :class:`ReductionFailure` when the iteration cap is hit or the
    fallback search runs out of budget.
    """
    f.validate()
    start = f.normalized()
    moves: list[HurwitzMove] = []
    steps: list[ReductionStep] = []
    cur = start
    for _ in range(max_iters):
        try:
            step = reduce_step(cur)
        except DescentStalled:
            res = find_path(frame_factorization(cur), frame_factorization(standard_frame()), node_budget)
            if not res.found:
                raise ReductionFailure(res.reason or "fallback search failed", cur) from None
            moves.extend(res.moves)
            return Descent(tuple(moves), steps, True, res.nodes)
        if step is None:
            return Descent(tuple(moves), steps)
        steps.append(step)
        moves.extend(step.moves)
        cur = step.new_frame
    raise ReductionFailure(f"no standard frame after {max_iters} steps", cur)


@dataclass
class TheoremCertificate:
    frame_a: Frame
    pattern_a: tuple[int, ...]
    frame_b: Frame
    pattern_b: tuple[int, ...]
    moves: MoveSequence
    digest: str
    stalls: int = 0
    meta: dict = field(default_factory=dict)

    @property
    def source(self) -> Factorization:
        return word_factorization(self.frame_a, self.pattern_a)

    @property
    def target(self) -> Factorization:
        return word_factorization(self.frame_b, self.pattern_b)

    def verify(self) -> bool:
        key = replay_key(self.source, self.moves)
        return key == canonical_key(self.target) and key_digest(key) == self.digest


def pattern_moves(pattern: Sequence[int]) -> MoveSequence:
    """Moves carrying the tuple spelled by ``pattern`` to the one spelled 1 2 1 2 1 2."""
    res = find_relation_path(pattern, STANDARD_PATTERN)
    if not res.connected:
        raise ReductionFailure(f"pattern {pattern} is not connected to {STANDARD_PATTERN}", stage="pattern")
    return relation_path_to_hurwitz(res.moves, pattern)


def connect_factorizations(
    frame_a: Frame,
    pattern_a: Sequence[int],
    frame_b: Frame,
    pattern_b: Sequence[int],
    max_iters: int = 64,
    node_budget: int = 100_000,
) -> TheoremCertificate:
    pattern_a, pattern_b = tuple(pattern_a), tuple(pattern_b)
    try:
        source = word_factorization(frame_a, pattern_a)
        target = word_factorization(frame_b, pattern_b)
    except FrameError as exc:
        raise ReductionFailure(str(exc), stage="input") from None

    stalls = 0
    parts = [pattern_moves(pattern_a)]
    for frame, stage in ((frame_a, "reduce A"), (frame_b, "reduce B")):
        try:
            d = reduce_to_standard(frame, max_iters, node_budget)
        except ReductionFailure as exc:
            raise ReductionFailure(exc.reason, exc.frame, stage) from None
        stalls += d.stalled
        parts.append(d.moves)
    parts.append(pattern_moves(pattern_b))
    moves = parts[0] + parts[1] + invert_moves(parts[2]) + invert_moves(parts[3])

    key = replay_key(source, moves)
    if key != canonical_key(target):
        raise ReductionFailure("assembled certificate fails replay", stage="verify")
    return TheoremCertificate(frame_a, pattern_a, frame_b, pattern_b, moves, key_digest(key), stalls)
