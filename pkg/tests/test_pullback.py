from fractions import Fraction as F
from itertools import combinations

import pytest

from cubiclam.chords import Chord, linked
from cubiclam.lamination import ParseError, check_sibling_invariant, dump_lamination, find_linked_pair
from cubiclam.pullback import (
    CriticalPortrait, InvalidPortraitError, critical_values, dump_portrait, enumerate_dendritic_portraits,
    exact_period_angles, lavaurs_qml, parse_portrait, portrait, preperiod_period, pullback_generate,
)
from cubiclam.quadcrit import quad

T = F(1, 3)
BASILICA = portrait(2, quad(F(1, 6), F(1, 3), F(2, 3), F(5, 6), degree=2))
TWO_LEAVES = portrait(3, quad(0, 0, T, T), quad(F(1, 2), F(1, 2), F(5, 6), F(5, 6)))


def test_basilica_depth2():
    L = pullback_generate(BASILICA, 2)
    major = Chord(T, 2 * T)
    assert major in L.leaves
    pre = [c for c in L.leaves if c.image(2) == major]
    assert len(pre) >= 2
    assert any(not linked(a, b) and not set(a.endpoints) & set(b.endpoints) for a, b in combinations(pre, 2))
    assert check_sibling_invariant(L).passed


def test_two_critical_leaves_depth0():
    L = pullback_generate(TWO_LEAVES, 0)
    assert L.leaves == {Chord(0, T), Chord(F(1, 2), F(5, 6))}


def test_depth_monotone_deterministic_and_realizing(small_corpus):
    for P in [BASILICA, *(p for p, _ in small_corpus[::3])]:
        prev = pullback_generate(P, 0).leaves
        for n in range(1, 5):
            L = pullback_generate(P, n)
            assert prev <= L.leaves
            prev = L.leaves
        assert dump_lamination(L) == dump_lamination(pullback_generate(P, 4))
        assert all(e in L.leaves for q in P.criticals for e in q.edges)
        assert find_linked_pair(L.scaled[1]) is None
        assert check_sibling_invariant(L).passed


def test_crossing_portrait_rejected():
    # the minor 0-1/4 maps to 0-3/4, which crosses the quadrilateral
    P = portrait(3, quad(F(1, 9), F(2, 9), F(4, 9), F(5, 9)), quad(F(7, 12), F(7, 12), F(11, 12), F(11, 12)))
    with pytest.raises(InvalidPortraitError):
        pullback_generate(P, 1)


def test_portrait_contract():
    with pytest.raises(InvalidPortraitError):
        CriticalPortrait(3, (quad(0, 0, T, T),))
    text = dump_portrait(TWO_LEAVES, seed=4)
    assert text == "degree=3 seed=4\n[0,0,1/3,1/3]\n[1/2,1/2,5/6,5/6]\n"
    assert parse_portrait(text) == (TWO_LEAVES, 4)
    assert parse_portrait("degree=3\n[0,0,1/3,1/3]\n[1/2,1/2,5/6,5/6]\n") == (TWO_LEAVES, None)
    with pytest.raises(ParseError) as e:
        parse_portrait("degree=3\n[0,0,1/3,1/3]\n[0,1/2,1/4,3/4]\n")
    assert e.value.line == 3


def test_preperiod_bookkeeping():
    assert preperiod_period(3, F(1, 6)) == (1, 1)
    assert preperiod_period(2, F(1, 7)) == (0, 3)
    vals = critical_values(2, 2)
    assert all(1 <= preperiod_period(3, v)[0] <= 2 and preperiod_period(3, v)[1] <= 2 for v in vals)
    assert F(1, 6) in vals and F(0) not in vals


def test_enumeration_outputs(small_corpus):
    assert small_corpus
    for P, M in small_corpus:
        assert check_sibling_invariant(M.lamination).passed
        objs = M.critical_objects
        if len(objs) == 2:
            assert not set(objs[0].vertices) & set(objs[1].vertices)
        for C in objs:
            assert all(preperiod_period(3, v)[0] >= 1 for v in C.vertices)
    pats = [(M.lamination, M.c1, M.c2) for _, M in small_corpus]
    assert len(set((id(L), a, b) for L, a, b in pats)) == len(pats)


def test_enumeration_is_seeded(small_corpus):
    again = enumerate_dendritic_portraits(2, 2, 8, depth=5, seed=7)
    assert [P for P, _ in again] == [P for P, _ in small_corpus]
    with pytest.raises(ValueError):
        enumerate_dendritic_portraits(0, 2, 1)


def test_lavaurs_small_periods():
    assert {str(c) for c in lavaurs_qml(2).leaves} == {"1/3-2/3"}
    q3 = {str(c) for c in lavaurs_qml(3).leaves}
    assert {"1/7-2/7", "3/7-4/7", "5/7-6/7"} <= q3
    assert [str(x) for x in exact_period_angles(3)] == ["1/7", "2/7", "3/7", "4/7", "5/7", "6/7"]


def test_lavaurs_unlinked_to_period_10():
    L = lavaurs_qml(10)
    assert len(L) == sum(len(exact_period_angles(k)) for k in range(2, 11)) // 2
    assert find_linked_pair(L.scaled[1]) is None
