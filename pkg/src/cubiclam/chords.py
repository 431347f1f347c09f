"""Chords of the unit disk, inscribed polygons and the predicates between them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .circle import (
    OPEN,
    Arc,
    format_angle,
    in_open_arc,
    parse_angle,
    preimages,
    sigma,
)


class CriticalChordError(ValueError):
    """Raised when siblings are requested for a chord with degenerate image."""


@dataclass(frozen=True, order=True)
class Chord:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = self.a % 1, self.b % 1
        if b < a:
            a, b = b, a
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def degenerate(self) -> bool:
        return self.a == self.b

    @property
    def endpoints(self) -> tuple[Fraction, Fraction]:
        return (self.a, self.b)

    def image(self, d: int) -> "Chord":
        return Chord(sigma(d, self.a), sigma(d, self.b))

    def __str__(self):
        return f"{format_angle(self.a)}-{format_angle(self.b)}"


def chord(a, b) -> Chord:
    return Chord(Fraction(a), Fraction(b))


def parse_chord(text: str) -> Chord:
    parts = text.strip().split("-")
    if len(parts) != 2:
        raise ValueError(f"malformed chord {text!r}")
    return Chord(parse_angle(parts[0]), parse_angle(parts[1]))


def linked(c1: Chord, c2: Chord) -> bool:
    """Distinct chords crossing in the open disk (endpoints strictly alternate)."""
    if c1 == c2 or c1.degenerate or c2.degenerate:
        return False
    a, b = c1.a, c1.b
    c, d = c2.a, c2.b
    if c in (a, b) or d in (a, b):
        return False
    return (a < c < b) != (a < d < b)


def is_critical(d: int, c: Chord) -> bool:
    if d < 2:
        raise ValueError("degree must be >= 2")
    return not c.degenerate and sigma(d, c.a) == sigma(d, c.b)


def _noncrossing_matchings(points: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    """Non-crossing perfect matchings of positions ``points`` listed in circular order."""
    if not points:
        yield []
        return
    first = points[0]
    for k in range(1, len(points), 2):
        inner, outer = points[1:k], points[k + 1:]
        for m_in in _noncrossing_matchings(inner):
            for m_out in _noncrossing_matchings(outer):
                yield [(first, points[k])] + m_in + m_out


def sibling_families(d: int, c: Chord) -> list[list[Chord]]:
    """Every family of d pairwise disjoint unlinked chords with the image of ``c`` containing ``c``."""
    img = c.image(d)
    if img.degenerate:
        raise CriticalChordError(f"{c} is critical for sigma_{d}")
    pts = sorted(preimages(d, img.a) + preimages(d, img.b))
    families = []
    for m in _noncrossing_matchings(list(range(2 * d))):
        fam = [Chord(pts[i], pts[j]) for i, j in m]
        if c in fam:
            families.append(fam)
    return families


def siblings(d: int, c: Chord) -> list[Chord]:
    """The d-1 siblings of a non-critical chord.

    When several disjoint families exist the rotations of ``c`` by k/d are
    used if they are pairwise disjoint; otherwise the family with the least
    total arc length is taken.
    """
    families = sibling_families(d, c)
    if len(families) > 1:
        rot = {Chord(c.a + Fraction(k, d), c.b + Fraction(k, d)) for k in range(d)}
        pick = [f for f in families if set(f) == rot]
        if pick:
            families = pick
        else:
            families.sort(key=lambda f: (sum(_short(x) for x in f), sorted(f)))
    return sorted(x for x in families[0] if x != c)


def _short(c: Chord) -> Fraction:
    ln = c.b - c.a
    return min(ln, 1 - ln)


@dataclass(frozen=True)
class Polygon:
    """Convex hull of finitely many circle points, vertices ascending in [0, 1)."""

    vertices: tuple[Fraction, ...]

    def __post_init__(self):
        vs = tuple(sorted({Fraction(v) % 1 for v in self.vertices}))
        object.__setattr__(self, "vertices", vs)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def edges(self) -> list[Chord]:
        vs = self.vertices
        if len(vs) < 2:
            return []
        if len(vs) == 2:
            return [Chord(vs[0], vs[1])]
        return [Chord(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    @property
    def holes(self) -> list[Arc]:
        vs = self.vertices
        return [Arc(vs[i], vs[(i + 1) % len(vs)], OPEN) for i in range(len(vs))]

    def diagonals(self) -> list[Chord]:
        es = set(self.edges)
        return [Chord(x, y) for x, y in combinations(self.vertices, 2) if Chord(x, y) not in es]

    def image(self, d: int) -> "Polygon":
        return polygon_image(d, self)

    def contains_polygon(self, other: "Polygon") -> bool:
        """Closed-hull containment; circle points lie in a hull only as vertices."""
        return set(other.vertices) <= set(self.vertices)

    def rotate(self, t: Fraction) -> "Polygon":
        return Polygon(tuple(v + t for v in self.vertices))

    def __str__(self):
        return ",".join(format_angle(v) for v in self.vertices)


def polygon(*vs) -> Polygon:
    return Polygon(tuple(Fraction(v) for v in vs))


def parse_polygon(text: str) -> Polygon:
    items = [s for s in text.strip().split(",")]
    if not items or any(not s.strip() for s in items):
        raise ValueError(f"malformed polygon {text!r}")
    return Polygon(tuple(parse_angle(s) for s in items))


def polygon_image(d: int, p: Polygon) -> Polygon:
    if d < 2:
        raise ValueError("degree must be >= 2")
    return Polygon(tuple(sigma(d, v) for v in p.vertices))


def polygons_intersect(p: Polygon, q: Polygon) -> bool:
    """Whether the closed convex hulls meet (boundary points count).

    Disjoint exactly when every vertex of ``q`` sits strictly inside one open
    hole of ``p``.
    """
    if not p.vertices or not q.vertices:
        return False
    if set(p.vertices) & set(q.vertices):
        return True
    for h in p.holes:
        if all(in_open_arc(x, h.start, h.end) for x in q.vertices):
            return False
    return True


def chords_of(items: Iterable[Chord]) -> list[Chord]:
    return sorted(set(items))
