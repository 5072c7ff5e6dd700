"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they are
produced; they are also collected in the terminal summary.
"""

import itertools
import random
import time

from braidhurwitz.artin import braids_equal, canonical_key as bkey
from braidhurwitz.braid import BraidWord, compose, inverse
from braidhurwitz.cli import random_reduced_word, verify_main
from braidhurwitz.formats import Certificate, parse_certificate
from braidhurwitz.frames import conjugate_frame, delta_patterns, frame_factorization, standard_frame, word_factorization
from braidhurwitz.hurwitz import (
    Factorization,
    HurwitzMove,
    R,
    Rinv,
    apply_move,
    apply_sequence,
    canonical_key,
    invert_moves,
    key_digest,
    orbit_bfs,
    replay_key,
)
from braidhurwitz.reduction import CONJ_BACKWARD, CONJ_FORWARD, CYCLE, connect_factorizations, pattern_moves
from braidhurwitz.rewrite import find_relation_path

from conftest import ACCEPTANCE_LINES

# brute-force baseline, computed once from the oracle over all of {1,2}^6 and frozen here
DELTA_BASELINE = (
    (1, 1, 2, 1, 1, 2),
    (1, 2, 1, 1, 2, 1),
    (1, 2, 1, 2, 1, 2),
    (1, 2, 2, 1, 2, 2),
    (2, 1, 1, 2, 1, 1),
    (2, 1, 2, 1, 2, 1),
    (2, 1, 2, 2, 1, 2),
    (2, 2, 1, 2, 2, 1),
)


def report(num, name, ok, elapsed, limit, detail=""):
    ok = ok and (limit is None or elapsed < limit)
    bound = f" (limit {limit:g}s)" if limit is not None else ""
    line = f"[{'PASS' if ok else 'FAIL'}] {num}. {name}: {detail} {elapsed:.2f}s{bound}".replace("  ", " ")
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def rand_word(rng, n, max_len):
    gens = [x for i in range(1, n) for x in (i, -i)]
    return BraidWord(n, tuple(rng.choice(gens) for _ in range(rng.randint(0, max_len))))


def test_1_presentation_relations():
    t0 = time.perf_counter()
    checked = bad = 0
    for n in (3, 4):
        for i in range(1, n):
            for j in range(i + 1, n):
                if j - i > 1:
                    ok = braids_equal(BraidWord(n, (i, j)), BraidWord(n, (j, i)))
                else:
                    ok = braids_equal(BraidWord(n, (i, j, i)), BraidWord(n, (j, i, j)))
                checked += 1
                bad += not ok
    assert report(1, "relations in B3 and B4", bad == 0, time.perf_counter() - t0, 1.0, f"{checked - bad}/{checked}")


def test_2_product_invariance():
    rng = random.Random(2)
    t0 = time.perf_counter()
    good = 0
    for _ in range(1000):
        m = rng.randint(2, 6)
        f = Factorization(3, tuple(rand_word(rng, 3, 6) for _ in range(m)))
        mv = HurwitzMove(rng.randint(0, m - 2), rng.random() < 0.5)
        good += braids_equal(apply_move(f, mv).product, f.product)
    assert report(2, "product invariance", good == 1000, time.perf_counter() - t0, 30.0, f"{good}/1000")


def test_3_hurwitz_action_consistency():
    rng = random.Random(3)
    t0 = time.perf_counter()
    good = 0
    for _ in range(200):
        f = Factorization(3, tuple(rand_word(rng, 3, 6) for _ in range(3)))
        a = apply_sequence(f, [R(0), R(1), R(0)])
        b = apply_sequence(f, [R(1), R(0), R(1)])
        braid_ok = all(braids_equal(x, y) for x, y in zip(a.factors, b.factors))
        trips = all(
            apply_sequence(f, [R(k), Rinv(k)]) == f and apply_sequence(f, [Rinv(k), R(k)]) == f for k in (0, 1)
        )
        good += braid_ok and trips
    assert report(3, "Hurwitz action consistency", good == 200, time.perf_counter() - t0, 30.0, f"{good}/200")


def test_4_positive_word_completeness():
    rng = random.Random(4)
    t0 = time.perf_counter()
    classes_by_len = []
    for k in range(9):
        by_key = {}
        for u in itertools.product((1, 2), repeat=k):
            by_key.setdefault(bkey(BraidWord(3, u)), []).append(u)
        classes_by_len.append(list(by_key.values()))

    equal_pairs = equal_ok = 0
    for classes in classes_by_len:
        for cls in classes:
            for a in cls:
                for b in cls:
                    res = find_relation_path(a, b)
                    equal_pairs += 1
                    equal_ok += res.connected and not res.exhausted

    # unequal pairs: same length, different oracle class
    unequal_ok = 0
    lengths = [k for k in range(2, 9) if len(classes_by_len[k]) > 1]
    for _ in range(1000):
        k = rng.choice(lengths)
        c1, c2 = rng.sample(classes_by_len[k], 2)
        res = find_relation_path(rng.choice(c1), rng.choice(c2))
        unequal_ok += not res.connected and not res.exhausted

    ok = equal_ok == equal_pairs and unequal_ok == 1000
    detail = f"equal {equal_ok}/{equal_pairs}, unequal NotConnected {unequal_ok}/1000"
    assert report(4, "positive word completeness (len <= 8)", ok, time.perf_counter() - t0, 600.0, detail)


def test_5_delta_patterns_in_standard_orbit():
    t0 = time.perf_counter()
    patterns = delta_patterns()
    std = frame_factorization(standard_frame())
    std_key = canonical_key(std)
    good = 0
    orbit = orbit_bfs(std, node_budget=2000)
    for p in patterns:
        target = word_factorization(standard_frame(), p)
        # certificate from the positive-word rewrite, read backwards from the standard tuple
        moves = invert_moves(pattern_moves(p))
        rewrite_ok = (
            replay_key(std, moves) == canonical_key(target)
            and canonical_key(apply_sequence(std, moves)) == canonical_key(target)
            and replay_key(target, pattern_moves(p)) == std_key
        )
        # independent certificate from the orbit spanning tree
        key = canonical_key(target)
        orbit_ok = key in orbit and replay_key(std, orbit.path_to(key)) == key
        good += rewrite_ok and orbit_ok
    ok = patterns == DELTA_BASELINE and good == len(DELTA_BASELINE)
    detail = f"{len(patterns)} patterns (baseline {len(DELTA_BASELINE)}), {good} certified"
    assert report(5, "Delta^2 patterns in one orbit", ok, time.perf_counter() - t0, 300.0, detail)


def test_6_verify_main():
    t0 = time.perf_counter()
    fields, timings, ok = verify_main(100, 8, 42)
    stall_rate = fields["stalls"] / 100
    again, _, _ = verify_main(3, 8, 42)
    deterministic = all(fields[f"case{i}"] == again[f"case{i}"] for i in range(3))
    ok = ok and fields["successes"] == 100 and deterministic
    detail = f"{fields['successes']}/100 verified, stall rate {stall_rate:.2%}, max case {max(timings):.2f}s"
    assert report(6, "verify-main 100 cases", ok, time.perf_counter() - t0, 900.0, detail)


def test_7_reduction_templates():
    rng = random.Random(7)
    t0 = time.perf_counter()
    good = total = 0
    for _ in range(50):
        f = conjugate_frame(standard_frame(), random_reduced_word(rng, rng.randint(0, 8)))
        a, b = f.h1.word, f.h2.word
        six = frame_factorization(f)
        expected = {
            CYCLE: (b, a) * 3,
            CONJ_BACKWARD: (b, compose(inverse(b), a, b)) * 3,
            CONJ_FORWARD: (compose(a, b, inverse(a)), a) * 3,
        }
        for template, want in expected.items():
            got = apply_sequence(six, template).factors
            total += 1
            good += all(braids_equal(x, y) for x, y in zip(got, want))
    assert report(7, "reduction templates", good == total, time.perf_counter() - t0, 60.0, f"{good}/{total}")


def test_8_certificate_mutations():
    rng = random.Random(8)
    patterns = delta_patterns()
    t0 = time.perf_counter()
    mutations = detected = preserved = 0
    while mutations < 100:
        fa = conjugate_frame(standard_frame(), random_reduced_word(rng, rng.randint(1, 6)))
        fb = conjugate_frame(standard_frame(), random_reduced_word(rng, rng.randint(1, 6)))
        cert = connect_factorizations(fa, rng.choice(patterns), fb, rng.choice(patterns))
        if not cert.moves:
            continue
        text = Certificate(3, cert.source, cert.moves, cert.digest).to_text()
        parsed = parse_certificate(text)
        i = rng.randrange(len(parsed.moves))
        mutated = list(parsed.moves)
        mutated[i] = mutated[i].inverse()
        end = replay_key(parsed.source, mutated)
        mutations += 1
        if end == canonical_key(cert.target):
            preserved += 1
        else:
            detected += key_digest(end) != parsed.digest
    changed = mutations - preserved
    detail = f"detected {detected}/{changed} endpoint-changing mutations, {preserved} preserved endpoint"
    assert report(8, "certificate mutations", detected == changed, time.perf_counter() - t0, None, detail)
