"""Minor sets, co-critical sets, mixed tags and the disjoint-or-equal engine."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .chords import Polygon, parse_polygon, polygon_image, polygons_intersect
from .circle import in_open_arc, preimages
from .lamination import directed_hausdorff, hausdorff_distance
from .quadcrit import MarkedLamination

DISJOINT = "disjoint"
EQUAL = "equal"
OVERLAP = "overlap"

THIRD = Fraction(1, 3)


class MalformedPatternError(ValueError):
    pass


@dataclass(frozen=True)
class MixedTag:
    """co(C1) x sigma_3(C2), a product set in the closed bidisk."""

    left: Polygon
    right: Polygon

    def intersects(self, other: "MixedTag") -> bool:
        return polygons_intersect(self.left, other.left) and polygons_intersect(self.right, other.right)

    def dump(self) -> str:
        return f"left: {self.left}\nright: {self.right}\n"


def parse_tag(text: str) -> MixedTag:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2 or not lines[0].startswith("left:") or not lines[1].startswith("right:"):
        raise ValueError("tag must be 'left: <polygon>' then 'right: <polygon>'")
    return MixedTag(parse_polygon(lines[0][5:]), parse_polygon(lines[1][6:]))


def minor_set(M: MarkedLamination) -> Polygon:
    return polygon_image(3, M.c2)


def cocritical_of(C: Polygon, only_critical_object: bool = False) -> Polygon:
    """co(C): C itself for a lone critical object, else the preimages of sigma_3(C) in its long hole."""
    if only_critical_object:
        return C
    long_holes = [h for h in C.holes if h.length > THIRD]
    if len(long_holes) != 1:
        raise MalformedPatternError(
            f"{C} has {len(long_holes)} holes longer than 1/3 and is not the only critical object")
    h = long_holes[0]
    pts = [x for v in polygon_image(3, C).vertices for x in preimages(3, v)
           if in_open_arc(x, h.start, h.end)]
    return Polygon(tuple(pts))


def cocritical_set(M: MarkedLamination) -> Polygon:
    """co(c1). Without precomputed critical objects, c1 counts as the only one when it contains c2."""
    if M.objects is not None:
        only = tuple(M.objects) == (M.c1,)
    else:
        only = M.c1.contains_polygon(M.c2)
    return cocritical_of(M.c1, only)


def mixed_tag(M: MarkedLamination) -> MixedTag:
    return MixedTag(cocritical_set(M), minor_set(M))


def tag_relation(t1: MixedTag, t2: MixedTag) -> str:
    if t1 == t2:
        return EQUAL
    return OVERLAP if t1.intersects(t2) else DISJOINT


def mixed_tag_relation(M1: MarkedLamination, M2: MarkedLamination) -> str:
    """``disjoint``, ``equal`` or ``overlap``; overlap between dendritic inputs is a counterexample."""
    return tag_relation(mixed_tag(M1), mixed_tag(M2))


@dataclass
class FamilyReport:
    size: int
    pairs: list[tuple[int, int, str]] = field(default_factory=list)

    def count(self, rel: str) -> int:
        return sum(1 for *_, r in self.pairs if r == rel)

    @property
    def overlaps(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j, r in self.pairs if r == OVERLAP]

    @property
    def ok(self) -> bool:
        return not self.overlaps

    def lines(self) -> list[str]:
        return [f"pair {i} {j}: {r}" for i, j, r in self.pairs]


def family_disjoint_or_equal(family: Sequence[MarkedLamination] | Sequence[MixedTag]) -> FamilyReport:
    tags = [m if isinstance(m, MixedTag) else mixed_tag(m) for m in family]
    rep = FamilyReport(len(tags))
    for i, j in combinations(range(len(tags)), 2):
        rep.pairs.append((i, j, tag_relation(tags[i], tags[j])))
    return rep


def _snap(P: Polygon, q: int) -> Polygon:
    """Round every vertex to the nearest multiple of 1/q."""
    return Polygon(tuple(Fraction(round(v * q), q) for v in P.vertices))


def usc_probe(sequence: Sequence[MarkedLamination], limit: MarkedLamination, tol: float = 1e-2) -> bool:
    """Whether the critical patterns of ``sequence`` converge into the pattern of ``limit``.

    Convergence is checked numerically: the Hausdorff distances between
    consecutive patterns must not increase and must end below ``tol``.
    The limit pattern is then recovered exactly by rounding the terminal
    vertices to the grid 1/Q, Q the least common denominator of the limit's
    vertices, and tested for containment coordinatewise.
    """
    if not sequence:
        raise ValueError("empty sequence")
    pats = [(M.c1, M.c2) for M in sequence]
    if len(pats) > 1:
        steps = [max(hausdorff_distance(a[j], b[j]) for j in (0, 1)) for a, b in zip(pats, pats[1:])]
        if any(s2 > s1 + 1e-12 for s1, s2 in zip(steps, steps[1:])) or steps[-1] > tol:
            raise ValueError("critical patterns do not converge")
    last = pats[-1]
    target = (limit.c1, limit.c2)
    if max(directed_hausdorff(last[j], target[j]) for j in (0, 1)) > tol:
        return False
    for C, L in zip(last, target):
        q = math.lcm(*(v.denominator for v in L.vertices))
        if not L.contains_polygon(_snap(C, q)):
            return False
    return True
