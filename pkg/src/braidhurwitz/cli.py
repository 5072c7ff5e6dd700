"""
Command-line driver.

Exit codes: 0 success, 1 semantic negative (unequal, not equivalent,
replay mismatch), 2 usage or parse error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import random
import statistics
import sys
import time
from pathlib import Path

from . import artin
from .braid import BraidError, BraidWord, format_word, parse_word
from .formats import (
    Certificate,
    FrameInput,
    as_factorization,
    factors_field,
    load_input,
    parse_certificate,
)
from .frames import FrameError, conjugate_frame, delta_patterns, delta_squared, standard_frame
from .hurwitz import (
    MoveError,
    canonical_key,
    find_path,
    format_moves,
    key_digest,
    orbit_bfs,
    replay_key,
    serialize_key,
)
from .reduction import ReductionFailure, connect_factorizations, reduce_to_standard

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _emit(args, fields: dict, *, digest: bool = True) -> None:
    """Print key=value lines (or one JSON object) closed by a digest line."""
    fields = {k: v for k, v in fields.items()}
    if digest:
        body = "\n".join(f"{k}={v}" for k, v in fields.items())
        fields["digest"] = artin.digest(body)
    if args.json:
        text = json.dumps(fields) + "\n"
    else:
        text = "".join(f"{k}={v}\n" for k, v in fields.items())
    _write(args, text)


def _write(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _fmt_bool(v: bool) -> str:
    return "true" if v else "false"


def cmd_equal(args) -> int:
    w1, w2 = parse_word(args.w1, args.n), parse_word(args.w2, args.n)
    eq = artin.braids_equal(w1, w2)
    if args.json:
        _write(args, json.dumps({"equal": eq}) + "\n")
    else:
        _write(args, _fmt_bool(eq) + "\n")
    return EXIT_OK if eq else EXIT_NEGATIVE


def cmd_delta2(args) -> int:
    w = delta_squared(args.n)
    if args.json:
        _write(args, json.dumps({"n": args.n, "word": format_word(w)}) + "\n")
    else:
        _write(args, format_word(w) + "\n")
    return EXIT_OK


def cmd_orbit(args) -> int:
    f = as_factorization(load_input(args.file))
    report = orbit_bfs(f, args.budget)
    keys = sorted(report.parents, key=serialize_key)
    fields = {
        "n": f.n,
        "m": f.m,
        "budget": args.budget,
        "size": report.size,
        "exhausted": _fmt_bool(report.exhausted),
        "orbit_digest": artin.digest("\n".join(serialize_key(k) for k in keys)),
    }
    if args.edges:
        edges = []
        for key in keys:
            entry = report.parents[key]
            if entry is not None:
                edges.append(f"{key_digest(entry[0])[:16]} {entry[1]} {key_digest(key)[:16]}")
        fields["edges"] = ";".join(edges)
    _emit(args, fields)
    return EXIT_OK


def _certificate_for(a, b, args) -> tuple[int, Certificate | None, str]:
    fa, fb = as_factorization(a), as_factorization(b)
    header = {"budget": str(args.budget), "max_iters": str(args.max_iters)}
    if isinstance(a, FrameInput) and isinstance(b, FrameInput):
        try:
            cert = connect_factorizations(a.frame, a.pattern, b.frame, b.pattern, args.max_iters, args.budget)
        except ReductionFailure as exc:
            return EXIT_BUDGET, None, str(exc)
        header.update(mode="frames", stalls=str(cert.stalls))
        moves = cert.moves
    else:
        if fa.n != fb.n or fa.m != fb.m:
            return EXIT_NEGATIVE, None, "shape mismatch"
        res = find_path(fa, fb, args.budget)
        if not res.found:
            code = EXIT_BUDGET if res.exhausted else EXIT_NEGATIVE
            return code, None, res.reason
        header.update(mode="search", nodes=str(res.nodes))
        moves = res.moves
    header["target"] = factors_field(fb)
    key = replay_key(fa, moves)
    if key != canonical_key(fb):
        raise AssertionError("certificate failed internal replay")
    return EXIT_OK, Certificate(fa.n, fa, moves, key_digest(key), header), ""


def cmd_connect(args) -> int:
    a, b = load_input(args.file_a), load_input(args.file_b)
    code, cert, reason = _certificate_for(a, b, args)
    if cert is None:
        print(f"connect: {reason}", file=sys.stderr)
        _emit(args, {"result": "failure", "reason": reason})
        return code
    _write(args, cert.to_json() + "\n" if args.json else cert.to_text())
    return EXIT_OK


def cmd_reduce_frame(args) -> int:
    inp = load_input(args.file)
    if not isinstance(inp, FrameInput):
        raise FrameError("reduce-frame needs a frame file")
    try:
        d = reduce_to_standard(inp.frame, args.max_iters, args.budget)
    except ReductionFailure as exc:
        print(f"reduce-frame: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    _emit(args, {
        "steps": len(d.steps),
        "directions": ",".join(s.direction.value for s in d.steps),
        "stalled": _fmt_bool(d.stalled),
        "length": len(d.moves),
        "moves": format_moves(d.moves),
    })
    return EXIT_OK


def random_reduced_word(rng: random.Random, length: int, n: int = 3) -> BraidWord:
    alphabet = [x for i in range(1, n) for x in (i, -i)]
    letters: list[int] = []
    while len(letters) < length:
        x = rng.choice(alphabet if not letters else [y for y in alphabet if y != -letters[-1]])
        letters.append(x)
    return BraidWord(n, tuple(letters))


def verify_main(count: int, conj_len: int, seed: int, max_iters: int = 64, budget: int = 100_000):
    """Run connect_factorizations on random frame pairs; returns (fields, timings, ok)."""
    rng = random.Random(seed)
    patterns = delta_patterns()
    fields: dict = {"count": count, "conj_len": conj_len, "seed": seed}
    cases = []
    timings = []
    ok = stalls = failures = 0
    for i in range(count):
        ga = random_reduced_word(rng, rng.randint(0, conj_len))
        gb = random_reduced_word(rng, rng.randint(0, conj_len))
        pa, pb = rng.choice(patterns), rng.choice(patterns)
        fa, fb = conjugate_frame(standard_frame(), ga), conjugate_frame(standard_frame(), gb)
        t0 = time.perf_counter()
        try:
            cert = connect_factorizations(fa, pa, fb, pb, max_iters, budget)
        except ReductionFailure as exc:
            failures += 1
            cases.append(f"conj_a={format_word(ga)} conj_b={format_word(gb)} result=failure stage={exc.stage}")
            continue
        finally:
            timings.append(time.perf_counter() - t0)
        verified = cert.verify()
        ok += verified
        failures += not verified
        stalls += cert.stalls
        cases.append(
            f"conj_a={format_word(ga)} conj_b={format_word(gb)} "
            f"pattern_a={''.join(map(str, pa))} pattern_b={''.join(map(str, pb))} "
            f"moves={len(cert.moves)} stalls={cert.stalls} "
            f"result={'verified' if verified else 'replay-mismatch'} replay={cert.digest}"
        )
    fields.update(successes=ok, failures=failures, stalls=stalls)
    for i, c in enumerate(cases):
        fields[f"case{i}"] = c
    return fields, timings, failures == 0


def cmd_verify_main(args) -> int:
    if args.count < 1:
        raise BraidError("count must be >= 1")
    fields, timings, ok = verify_main(args.count, args.conj_len, args.seed, args.max_iters, args.budget)
    _emit(args, fields)
    if timings:
        qs = statistics.quantiles(timings, n=100, method="inclusive") if len(timings) > 1 else timings * 99
        print(
            f"timing_s total={sum(timings):.3f} p50={qs[49]:.4f} p90={qs[89]:.4f} "
            f"p99={qs[98]:.4f} max={max(timings):.4f}",
            file=sys.stderr,
        )
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_replay(args) -> int:
    cert = parse_certificate(Path(args.certificate).read_text())
    source = as_factorization(load_input(args.factorization)) if args.factorization else cert.source
    try:
        key = replay_key(source, cert.moves)
    except MoveError as exc:
        print(f"replay: {exc}", file=sys.stderr)
        _emit(args, {"match": "false", "reason": str(exc)})
        return EXIT_NEGATIVE
    got = key_digest(key)
    match = got == cert.digest
    _emit(args, {"moves": len(cert.moves), "expected": cert.digest, "replay": got, "match": _fmt_bool(match)})
    return EXIT_OK if match else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--out", help="write output to this path")
    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--budget", type=int, default=100_000, help="node budget for searches")
    search.add_argument("--max-iters", type=int, default=64, help="descent iteration cap")

    p = argparse.ArgumentParser(prog="braidhurwitz", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("equal", parents=[common], help="decide equality of two braid words")
    s.add_argument("-n", type=int, default=3, help="strand count")
    s.add_argument("w1")
    s.add_argument("w2")
    s.set_defaults(func=cmd_equal)

    s = sub.add_parser("delta2", parents=[common], help="print the word for Delta_n^2")
    s.add_argument("-n", type=int, default=3)
    s.set_defaults(func=cmd_delta2)

    s = sub.add_parser("orbit", parents=[common], help="enumerate a Hurwitz orbit")
    s.add_argument("file")
    s.add_argument("--budget", type=int, default=100_000)
    s.add_argument("--edges", action="store_true", help="include the spanning tree edges")
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("connect", parents=[common, search], help="certify Hurwitz equivalence of two inputs")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.set_defaults(func=cmd_connect)

    s = sub.add_parser("reduce-frame", parents=[common, search], help="descend a frame to the standard one")
    s.add_argument("file")
    s.set_defaults(func=cmd_reduce_frame)

    s = sub.add_parser("verify-main", parents=[common, search], help="connect random frame factorizations end to end")
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--conj-len", type=int, default=8)
    s.add_argument("--seed", type=int, default=42)
    s.set_defaults(func=cmd_verify_main)

    s = sub.add_parser("replay", parents=[common], help="replay a certificate and compare digests")
    s.add_argument("certificate")
    s.add_argument("factorization", nargs="?", help="starting tuple (defaults to the certificate's source)")
    s.set_defaults(func=cmd_replay)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
