"""The acceptance gate: one recorded pass/fail line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as they
are produced; they are also repeated in the terminal summary.
"""
import random
import time
from fractions import Fraction as F
from itertools import combinations

import pytest

from acceptance_log import record
from builders import random_collapsing_quad, shrinking_sequence, strongly_linked_sequence
from cubiclam.chords import Chord, linked, polygon
from cubiclam.lamination import check_sibling_invariant
from cubiclam.pullback import enumerate_dendritic_portraits, lavaurs_qml
from cubiclam.quadcrit import ESSENTIALLY_EQUAL, LINKED, classify_pair, strongly_linked
from cubiclam.tags import cocritical_of, family_disjoint_or_equal, usc_probe
from oracles import chords_cross

T = F(1, 3)
SEED = 0


@pytest.fixture(scope="module")
def corpus():
    t0 = time.perf_counter()
    found = enumerate_dendritic_portraits(3, 3, 60, depth=8, seed=SEED)
    return [M for _, M in found], time.perf_counter() - t0


def test_criterion_1_disjoint_or_equal(corpus):
    family, built = corpus
    t0 = time.perf_counter()
    rep = family_disjoint_or_equal(family)
    spent = built + time.perf_counter() - t0
    pairs = len(rep.pairs)
    ok = len(family) >= 100 and pairs >= 4950 and not rep.overlaps and spent <= 300
    record(1, "mixed tags disjoint or equal", ok,
           f"{len(family)} marked laminations, {pairs} pairs, overlap={len(rep.overlaps)} "
           f"equal={rep.count('equal')}, {spent:.0f}s")
    assert ok


def test_criterion_2_linked_or_equal_pairs(corpus):
    family, _ = corpus
    hits = violations = distinct_hits = 0
    for i, j in combinations(range(len(family)), 2):
        if classify_pair(family[i], family[j]) in (LINKED, ESSENTIALLY_EQUAL):
            distinct_hits += 1
            hits += 1
            violations += not _linked_pair_ok(family[i], family[j])
    for M in family:
        if classify_pair(M, M) in (LINKED, ESSENTIALLY_EQUAL):
            hits += 1
            violations += not _linked_pair_ok(M, M)
        else:
            violations += 1
    ok = violations == 0
    record(2, "linked or essentially equal implies same lamination", ok,
           f"{hits} related pairs ({distinct_hits} between distinct items), violations={violations}")
    assert ok


def _linked_pair_ok(M1, M2) -> bool:
    if M1.lamination.leaves != M2.lamination.leaves:
        return False
    fwd = M1.c1.contains_polygon(M2.c1) and M1.c2.contains_polygon(M2.c2)
    back = M2.c1.contains_polygon(M1.c1) and M2.c2.contains_polygon(M1.c2)
    return fwd or back


def test_criterion_3_qml_unlinked():
    t0 = time.perf_counter()
    leaves = sorted(lavaurs_qml(8).leaves)
    bad = sum(1 for a, b in combinations(leaves, 2) if linked(a, b))
    spent = time.perf_counter() - t0
    ok = bad == 0 and spent <= 10
    record(3, "period <= 8 minors never cross", ok, f"{len(leaves)} minors, linked pairs={bad}, {spent:.1f}s")
    assert ok


def test_criterion_4_cocritical_reconstruction():
    rng = random.Random(SEED)
    fails = 0
    for _ in range(1000):
        C = random_collapsing_quad(rng)
        assert any(h.length > T for h in C.holes)
        co = cocritical_of(C)
        fails += polygon(*(v + k for v in co.vertices for k in (T, 2 * T))) != C
    record(4, "co-critical reconstruction", fails == 0, f"1000 quadrilaterals, failures={fails}")
    assert fails == 0


def test_criterion_5_generator_soundness(corpus):
    family, _ = corpus
    lams = list({id(M.lamination): M.lamination for M in family}.values())
    fails = sum(1 for L in lams if not check_sibling_invariant(L).passed)
    tested = sum(len(check_sibling_invariant(L).entries) for L in lams[:5])
    record(5, "generated laminations are sibling invariant", fails == 0,
           f"{len(lams)} laminations (depth 8), failures={fails}; first five test {tested} leaves")
    assert fails == 0


def test_criterion_6_strong_linkage_closed():
    rng = random.Random(SEED)
    fails = 0
    for _ in range(1000):
        seq, (A, B) = strongly_linked_sequence(rng)
        assert all(strongly_linked(P, Q) for P, Q in seq)
        assert max(v.denominator for P, Q in seq for v in P.vertices + Q.vertices) <= 2 ** 20
        fails += not strongly_linked(A, B)
    record(6, "strong linkage survives limits", fails == 0, f"1000 sequences, failures={fails}")
    assert fails == 0


def test_criterion_7_usc(corpus):
    family, _ = corpus
    leafy = [M for M in family if len(M.c1) == 2 and len(M.c2) == 2]
    cases = [(M, w, s) for M in leafy for w in (0, 1) for s in (1, -1)][:20]
    fails = sum(1 for M, w, s in cases if not usc_probe(shrinking_sequence(M, w, s), M))
    ok = len(cases) == 20 and fails == 0
    record(7, "USC probe", ok, f"{len(cases)} sequences, failures={fails}")
    assert ok


def test_criterion_8_predicate_cross_validation():
    rng = random.Random(SEED)

    def rand_chord():
        while True:
            q = rng.randint(2, 1000)
            a, b = F(rng.randrange(q), q), F(rng.randrange(q), q)
            if a != b:
                return Chord(min(a, b), max(a, b))

    bad = 0
    for _ in range(10 ** 5):
        c1, c2 = rand_chord(), rand_chord()
        bad += linked(c1, c2) != chords_cross((c1.a, c1.b), (c2.a, c2.b))
    record(8, "exact and floating crossing agree", bad == 0, f"100000 pairs, disagreements={bad}")
    assert bad == 0
