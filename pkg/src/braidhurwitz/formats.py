"""
Text formats for factorizations, frames and certificates.

Factorization file::

    n=3 m=2
    1 2 -1
    1

Frame file, either compact::

    frame: conj=1 2
    pattern: 2 1 2 1 2 1

or explicit (bases default to 1 and 2, pattern to 1 2 1 2 1 2)::

    w1 = 1 2
    w2 = -1
    bases = 1 2
    pattern = 1 2 1 2 1 2

Certificate: ``key=value`` lines; factor lists separate words with commas.
Lines starting with ``#`` are comments everywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .braid import BraidWord, ParseError, format_word, parse_word
from .frames import Frame, HalfTwist, standard_frame, word_factorization
from .hurwitz import Factorization, MoveSequence, format_moves, parse_moves

STANDARD_PATTERN = (1, 2, 1, 2, 1, 2)


@dataclass
class FrameInput:
    frame: Frame
    pattern: tuple[int, ...] = STANDARD_PATTERN

    def factorization(self) -> Factorization:
        return word_factorization(self.frame, self.pattern)


def _content_lines(text: str) -> list[str]:
    return [ln for ln in text.splitlines() if not ln.lstrip().startswith("#")]


def _parse_header(line: str) -> dict[str, int]:
    out = {}
    for tok in line.split():
        name, sep, value = tok.partition("=")
        if not sep or name not in ("n", "m") or not value.isdigit():
            raise ParseError(f"bad header token {tok!r}, expected 'n=<strands> m=<factors>'")
        out[name] = int(value)
    if set(out) != {"n", "m"}:
        raise ParseError("header must give both n and m")
    return out


def parse_factorization(text: str) -> Factorization:
    lines = _content_lines(text)
    while lines and not lines[0].strip():
        lines.pop(0)
    if not lines:
        raise ParseError("empty factorization file")
    hdr = _parse_header(lines[0])
    body = lines[1:]
    m = hdr["m"]
    if len(body) < m:
        raise ParseError(f"header announces {m} factors but only {len(body)} lines follow")
    if any(ln.strip() for ln in body[m:]):
        raise ParseError(f"more than {m} factor lines")
    return Factorization(hdr["n"], tuple(parse_word(ln, hdr["n"]) for ln in body[:m]))


def format_factorization(f: Factorization) -> str:
    lines = [f"n={f.n} m={f.m}"] + [format_word(w) for w in f.factors]
    return "\n".join(lines) + "\n"


def _parse_pattern(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split())
    except ValueError:
        raise ParseError(f"bad pattern {text!r}") from None


def parse_frame(text: str) -> FrameInput:
    fields: dict[str, str] = {}
    for ln in _content_lines(text):
        if not ln.strip():
            continue
        if ln.strip().startswith("frame:"):
            rest = ln.strip()[len("frame:"):].strip()
            name, sep, value = rest.partition("=")
            if name.strip() != "conj" or not sep:
                raise ParseError(f"expected 'frame: conj=<word>', got {ln!r}")
            fields["conj"] = value
            continue
        for sep in ("=", ":"):
            name, found, value = ln.partition(sep)
            if found:
                fields[name.strip()] = value
                break
        else:
            raise ParseError(f"cannot parse frame line {ln!r}")
    pattern = _parse_pattern(fields.pop("pattern", "1 2 1 2 1 2"))
    if "conj" in fields:
        if set(fields) - {"conj"}:
            raise ParseError("compact frame form takes only conj= and pattern")
        frame = standard_frame().conjugated(parse_word(fields["conj"], 3))
    elif "w1" in fields and "w2" in fields:
        bases = _parse_pattern(fields.get("bases", "1 2"))
        if len(bases) != 2:
            raise ParseError("bases needs two indices")
        frame = Frame(
            HalfTwist(parse_word(fields["w1"], 3), bases[0]),
            HalfTwist(parse_word(fields["w2"], 3), bases[1]),
        )
    else:
        raise ParseError("frame file needs 'frame: conj=...' or both w1 and w2")
    return FrameInput(frame, pattern)


def format_frame(inp: FrameInput) -> str:
    f = inp.frame
    return (
        f"w1 = {format_word(f.h1.conjugator)}\n"
        f"w2 = {format_word(f.h2.conjugator)}\n"
        f"bases = {f.h1.base} {f.h2.base}\n"
        f"pattern = {' '.join(map(str, inp.pattern))}\n"
    )


def parse_input(text: str) -> FrameInput | Factorization:
    """A frame file or a raw factorization file, told apart by the first line."""
    for ln in _content_lines(text):
        if ln.strip():
            if ln.strip().startswith("n="):
                return parse_factorization(text)
            return parse_frame(text)
    raise ParseError("empty input")


def load_input(path: str | Path) -> FrameInput | Factorization:
    return parse_input(Path(path).read_text())


def as_factorization(inp: FrameInput | Factorization) -> Factorization:
    return inp.factorization() if isinstance(inp, FrameInput) else inp


def factors_field(f: Factorization) -> str:
    return ",".join(format_word(w) for w in f.factors)


def parse_factors_field(text: str, n: int) -> Factorization:
    return Factorization(n, tuple(parse_word(part, n) for part in text.split(",")))


@dataclass
class Certificate:
    """Serialized move sequence plus the digest of the endpoint key."""

    n: int
    source: Factorization
    moves: MoveSequence
    digest: str
    header: dict[str, str] = field(default_factory=dict)

    def fields(self) -> dict[str, str]:
        out = {"n": str(self.n), "m": str(self.source.m)}
        out.update(self.header)
        out["source"] = factors_field(self.source)
        out["length"] = str(len(self.moves))
        out["moves"] = format_moves(self.moves)
        out["digest"] = self.digest
        return out

    def to_text(self) -> str:
        lines = ["# hurwitz move certificate"]
        lines += [f"{k}={v}" for k, v in self.fields().items()]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.fields(), sort_keys=False)


def parse_certificate(text: str) -> Certificate:
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
    else:
        data = {}
        for ln in _content_lines(text):
            if not ln.strip():
                continue
            name, sep, value = ln.partition("=")
            if not sep:
                raise ParseError(f"bad certificate line {ln!r}")
            data[name.strip()] = value
    try:
        n = int(data.pop("n"))
        data.pop("m", None)
        source = parse_factors_field(data.pop("source"), n)
        moves = parse_moves(data.pop("moves"))
        digest = data.pop("digest").strip()
    except KeyError as exc:
        raise ParseError(f"certificate lacks field {exc}") from None
    length = data.pop("length", None)
    if length is not None and int(length) != len(moves):
        raise ParseError(f"certificate says length={length} but lists {len(moves)} moves")
    return Certificate(n, source, moves, digest, {k: str(v) for k, v in data.items()})
