"""Thurston pullback from critical portraits, dendritic enumeration and a Lavaurs oracle.

All hot loops run on integer numerators over one common denominator ``N``;
a leaf ``(a, b)`` stands for the chord between ``a/N`` and ``b/N``.
"""
from __future__ import annotations

import logging
import math
import random
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .chords import Polygon, _noncrossing_matchings, preimages
from .circle import sigma
from .lamination import Lamination, ParseError, _parse_header, critical_objects, find_linked_pair
from .quadcrit import CriticalQuadrilateral, MarkedLamination, parse_quad

log = logging.getLogger(__name__)


class InvalidPortraitError(ValueError):
    pass


class AmbiguousPullbackError(ValueError):
    pass


@dataclass(frozen=True)
class CriticalPortrait:
    degree: int
    criticals: tuple[CriticalQuadrilateral, ...]

    def __post_init__(self):
        if not isinstance(self.degree, int) or self.degree < 2:
            raise InvalidPortraitError(f"degree must be >= 2, got {self.degree!r}")
        qs = tuple(self.criticals)
        if len(qs) != self.degree - 1:
            raise InvalidPortraitError(f"need {self.degree - 1} critical quadrilaterals, got {len(qs)}")
        if any(q.degree != self.degree for q in qs):
            raise InvalidPortraitError("quadrilateral degree does not match the portrait")
        object.__setattr__(self, "criticals", qs)

    @property
    def hulls(self) -> list[Polygon]:
        return sorted({q.hull for q in self.criticals}, key=lambda p: p.vertices)


def portrait(degree: int, *qs: CriticalQuadrilateral) -> CriticalPortrait:
    return CriticalPortrait(degree, tuple(qs))


def dump_portrait(P: CriticalPortrait, seed: int | None = None) -> str:
    head = f"degree={P.degree}" + (f" seed={seed}" if seed is not None else "")
    return "\n".join([head, *(str(q) for q in P.criticals)]) + "\n"


def parse_portrait(text: str) -> tuple[CriticalPortrait, int | None]:
    """Parse a portrait file; returns the portrait and the optional seed."""
    rows = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1)
            if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise ParseError(1, "empty portrait file")
    hdr = _parse_header(rows[0][1], rows[0][0], ("degree",), ("seed",))
    d = hdr["degree"]
    qs = []
    for i, ln in rows[1:]:
        try:
            qs.append(parse_quad(ln, d))
        except ValueError as e:
            raise ParseError(i, str(e)) from None
    try:
        return CriticalPortrait(d, tuple(qs)), hdr.get("seed")
    except ValueError as e:
        raise ParseError(rows[0][0], str(e)) from None


# -- pullback ----------------------------------------------------------------

def _norm(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


def _crosses(p: tuple[int, int], q: tuple[int, int]) -> bool:
    a, b = p
    c, e = q
    if c in p or e in p:
        return False
    return (a < c < b) != (a < e < b)


class _Puller:
    def __init__(self, d: int, n: int, quads: Sequence[tuple[int, ...]]):
        self.d, self.n = d, n
        spikes, barrier = set(), set()
        for v in quads:
            for i in range(4):
                e = _norm(v[i], v[(i + 1) % 4])
                if e[0] != e[1]:
                    barrier.add(e)
            for s in (_norm(v[0], v[2]), _norm(v[1], v[3])):
                spikes.add(s)
                barrier.add(s)
        self.spikes = sorted(spikes)
        self.barrier = sorted(barrier)
        self.fallbacks = 0

    def _label(self, x: int):
        # a point on a spike endpoint counts as lying just counterclockwise of it
        return tuple(a <= x < b for a, b in self.spikes)

    def pull(self, leaf: tuple[int, int]) -> list[tuple[int, int]]:
        d, n = self.d, self.n
        u, v = leaf
        pu = [(u + k * n) // d for k in range(d)]
        pv = [(v + k * n) // d for k in range(d)]
        cell = {self._label(x): x for x in pu}
        if len(cell) == d:
            out = []
            for y in pv:
                x = cell.get(self._label(y))
                if x is None:
                    break
                out.append(_norm(x, y))
            else:
                return out
        return self._fallback(leaf, pu, pv)

    def _fallback(self, leaf, pu, pv) -> list[tuple[int, int]]:
        # first non-crossing pairing of u-preimages with v-preimages avoiding the portrait
        self.fallbacks += 1
        pts = sorted(pu + pv)
        is_u = {x: x in pu for x in pts}
        for m in _noncrossing_matchings(list(range(len(pts)))):
            chords = [_norm(pts[i], pts[j]) for i, j in m]
            if any(is_u[a] == is_u[b] for a, b in chords):
                continue
            if any(_crosses(c, s) for c in chords for s in self.barrier):
                continue
            return sorted(chords)
        raise AmbiguousPullbackError(f"no admissible pullback of leaf {leaf} over {self.n}")


def _scale(criticals: Sequence[CriticalQuadrilateral], factor: int = 1) -> tuple[int, list[tuple[int, ...]]]:
    n = 1
    for q in criticals:
        for x in q.vertices:
            n = math.lcm(n, x.denominator)
    n *= factor
    return n, [tuple(int(x * n) for x in q.vertices) for q in criticals]


def _forward_orbit(d: int, n: int, quads, barrier) -> set[tuple[int, int]]:
    """Edges of ``quads`` with their forward images; raises if any of them crosses."""
    base = set()
    for v in quads:
        for i in range(4):
            e = _norm(v[i], v[(i + 1) % 4])
            if e[0] != e[1]:
                base.add(e)
    orbit = set(base)
    todo = list(base)
    while todo:
        a, b = todo.pop()
        img = _norm(d * a % n, d * b % n)
        if img[0] != img[1] and img not in orbit:
            orbit.add(img)
            todo.append(img)
    for leaf in sorted(orbit):
        for s in barrier:
            if _crosses(leaf, s):
                raise InvalidPortraitError(
                    f"forward orbit leaf {Fraction(leaf[0], n)}-{Fraction(leaf[1], n)} crosses the portrait")
    if find_linked_pair(orbit) is not None:
        raise InvalidPortraitError("forward orbits of the portrait cross each other")
    return orbit


def orbit_clear(criticals: Sequence[CriticalQuadrilateral], d: int = 3) -> bool:
    """Whether forward orbits of the quadrilaterals' edges avoid each other and the quadrilaterals."""
    n, quads = _scale(criticals)
    try:
        _forward_orbit(d, n, quads, _Puller(d, n, quads).barrier)
    except InvalidPortraitError:
        return False
    return True


def pullback_generate(P: CriticalPortrait, depth: int) -> Lamination:
    """Leaves of the critical quadrilaterals, their forward orbits and ``depth`` rounds of pullbacks.

    A pullback of a leaf pairs its preimage endpoints lying in the same
    complementary cell of the spikes; an endpoint on a spike endpoint belongs
    to the cell on its counterclockwise side. If the cells do not pair the
    endpoints, the first non-crossing completion avoiding the portrait is used.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    d = P.degree
    n, quads = _scale(P.criticals, d ** depth)
    puller = _Puller(d, n, quads)

    orbit = _forward_orbit(d, n, quads, puller.barrier)
    leaves = set(orbit)
    frontier = sorted(orbit)
    for _ in range(depth):
        new = set()
        for leaf in frontier:
            for c in puller.pull(leaf):
                if c not in leaves:
                    new.add(c)
        leaves |= new
        frontier = sorted(new)
    if puller.fallbacks:
        log.debug("pullback used %d fallback matchings", puller.fallbacks)
    g = 0
    for a, b in leaves:
        g = math.gcd(g, a, b)
    g = math.gcd(g, n)
    return Lamination.from_scaled(d, n // g, ((a // g, b // g) for a, b in leaves), depth)


# -- dendritic enumeration ---------------------------------------------------

def preperiod_period(d: int, x: Fraction) -> tuple[int, int]:
    """Preperiod and exact period of ``x`` under sigma_d."""
    seen = {}
    k = 0
    x = x % 1
    while x not in seen:
        seen[x] = k
        x = sigma(d, x)
        k += 1
    return seen[x], k - seen[x]


def critical_values(max_preperiod: int, max_period: int, d: int = 3) -> list[Fraction]:
    """Strictly preperiodic angles with preperiod and period within the bounds."""
    out = set()
    for k in range(1, max_preperiod + 1):
        for m in range(1, max_period + 1):
            q = d ** k * (d ** m - 1)
            for p in range(q):
                x = Fraction(p, q)
                pre, per = preperiod_period(d, x)
                if 1 <= pre <= max_preperiod and per <= max_period:
                    out.add(x)
    return sorted(out)


def max_gap_leaf_count(lam: Lamination) -> int:
    """Most leaves on the boundary of one complementary region."""
    from .lamination import gaps
    return max((len(g.leaf_edges) for g in gaps(lam)), default=0)


def _leaf_quad(x: Fraction, y: Fraction) -> CriticalQuadrilateral:
    return CriticalQuadrilateral((x, x, y, y), 3)


def admissible_minors(values: Sequence[Fraction], d: int = 3) -> list[tuple[Fraction, Fraction]]:
    """Chords between two of ``values`` whose forward orbit never crosses itself."""
    n = 1
    for v in values:
        n = math.lcm(n, v.denominator)
    iv = [int(v * n) for v in values]
    out = []
    for i, v in enumerate(iv):
        for w in iv[i + 1:]:
            orbit: list[tuple[int, int]] = []
            m = (v, w)
            while m[0] != m[1] and m not in orbit:
                if any(_crosses(o, m) for o in orbit):
                    break
                orbit.append(m)
                m = _norm(d * m[0] % n, d * m[1] % n)
            else:
                out.append((Fraction(v, n), Fraction(w, n)))
    return out


def _random_candidate(rng: random.Random, values: Sequence[Fraction],
                      minors: Sequence[tuple[Fraction, Fraction]]) -> CriticalPortrait | None:
    kind = rng.random()
    if kind < 0.1:
        a, b, c = preimages(3, rng.choice(values))
        return CriticalPortrait(3, (CriticalQuadrilateral((a, a, b, c), 3), CriticalQuadrilateral((a, b, b, c), 3)))
    if kind < 0.4 and minors:
        first = None
        for _ in range(200):
            v, w = rng.choice(minors)
            xs = rng.sample(preimages(3, v), 2)
            ys = rng.sample(preimages(3, w), 2)
            try:
                Q = CriticalQuadrilateral(tuple(sorted(xs + ys)), 3)
            except ValueError:
                continue
            if orbit_clear([Q]):
                first = Q
                break
        if first is None:
            return None
    else:
        first = _leaf_quad(*rng.sample(preimages(3, rng.choice(values)), 2))
    for _ in range(50):
        second = _leaf_quad(*rng.sample(preimages(3, rng.choice(values)), 2))
        if not set(first.vertices) & set(second.vertices) and orbit_clear([first, second]):
            break
    else:
        return None
    return CriticalPortrait(3, (first, second))


def enumerate_dendritic_portraits(max_preperiod: int, max_period: int, count: int, depth: int = 8,
                                  seed: int = 0, max_gap_leaves: int = 64,
                                  max_attempts: int | None = None) -> list[tuple[CriticalPortrait, MarkedLamination]]:
    """Up to ``count`` distinct cubic dendritic laminations from preperiodic critical data.

    Candidates are drawn in a seeded random order: two disjoint critical leaves,
    a collapsing quadrilateral over an admissible minor with a critical leaf,
    or an all-critical triangle. Each lamination appears marked both ways when bicritical.
    """
    if max_preperiod < 1 or max_period < 1:
        raise ValueError("bounds must be >= 1")
    rng = random.Random(seed)
    values = critical_values(max_preperiod, max_period)
    minors = admissible_minors(values)
    max_attempts = max_attempts or 200 * count + 1000
    seen_portraits, seen_lams = set(), set()
    out = []
    found = 0
    for _ in range(max_attempts):
        if found >= count:
            break
        P = _random_candidate(rng, values, minors)
        if P is None or frozenset(P.criticals) in seen_portraits:
            continue
        seen_portraits.add(frozenset(P.criticals))
        hulls = P.hulls
        try:
            small = pullback_generate(P, min(depth, 3))
            if critical_objects(small) != hulls:
                log.info("skip %s: critical sets not saturated", _pstr(P))
                continue
            lam = pullback_generate(P, depth)
        except ValueError as e:
            log.info("skip %s: %s", _pstr(P), e)
            continue
        if not _saturated(lam, hulls):
            log.info("skip %s: extra leaves at a critical vertex", _pstr(P))
            continue
        key = frozenset(lam.scaled[1]), lam.scaled[0]
        if key in seen_lams:
            continue
        if max_gap_leaf_count(small) > max_gap_leaves:
            log.info("skip %s: large gap at low depth", _pstr(P))
            continue
        seen_lams.add(key)
        found += 1
        objs = tuple(hulls)
        if len(hulls) == 1:
            out.append((P, MarkedLamination(lam, hulls[0], hulls[0], objs)))
        else:
            X, Y = hulls
            out.append((P, MarkedLamination(lam, X, Y, objs)))
            out.append((P, MarkedLamination(lam, Y, X, objs)))
    return out


def _saturated(lam: Lamination, hulls: Iterable[Polygon]) -> bool:
    n, pairs = lam.scaled
    edges = {(int(e.a * n), int(e.b * n)) for h in hulls for e in h.edges}
    verts = {x for e in edges for x in e}
    return all(p in edges for p in pairs if p[0] in verts or p[1] in verts)


def _pstr(P: CriticalPortrait) -> str:
    return " ".join(str(q) for q in P.criticals)


# -- quadratic oracle --------------------------------------------------------

def exact_period_angles(k: int) -> list[Fraction]:
    q = 2 ** k - 1
    return [x for x in (Fraction(p, q) for p in range(q)) if preperiod_period(2, x) == (0, k)]


def lavaurs_qml(max_period: int) -> Lamination:
    """Minor chords of periods 2..max_period by Lavaurs' pairing rule.

    Period by period, the smallest unpaired angle joins the next larger
    unpaired angle of that period whose chord crosses nothing drawn so far.
    """
    if max_period < 1:
        raise ValueError("max_period must be >= 1")
    n = 1
    for k in range(1, max_period + 1):
        n = math.lcm(n, 2 ** k - 1)
    drawn: list[tuple[int, int]] = []
    for k in range(2, max_period + 1):
        free = [int(x * n) for x in exact_period_angles(k)]
        while free:
            a = free.pop(0)
            for j, b in enumerate(free):
                if not any(_crosses((a, b), c) for c in drawn):
                    drawn.append((a, b))
                    del free[j]
                    break
            else:
                raise RuntimeError(f"no partner for period-{k} angle {Fraction(a, n)}")
    return Lamination.from_scaled(2, n, drawn, 0)
