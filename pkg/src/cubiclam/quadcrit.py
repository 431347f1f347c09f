"""Critical quadrilaterals, strong linkage and marked cubic laminations."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from typing import Sequence

from .chords import Chord, Polygon, linked
from .circle import cyclically_ordered, format_angle, parse_angle, sigma
from .lamination import Lamination, critical_objects

LINKED = "linked"
ESSENTIALLY_EQUAL = "essentially_equal"
UNRELATED = "unrelated"


@dataclass(frozen=True)
class CriticalQuadrilateral:
    """A circularly ordered quadruple whose diagonals (spikes) are critical chords.

    Stored as the lexicographically smallest of its four rotations.
    """

    vertices: tuple[Fraction, Fraction, Fraction, Fraction]
    degree: int = 3

    def __post_init__(self):
        vs = tuple(Fraction(v) % 1 for v in self.vertices)
        if len(vs) != 4:
            raise ValueError("a quadrilateral has four vertices")
        if not cyclically_ordered(list(vs), strict=False):
            raise ValueError(f"vertices {_fmt(vs)} are not circularly ordered")
        d = self.degree
        for x, y in ((vs[0], vs[2]), (vs[1], vs[3])):
            if x == y or sigma(d, x) != sigma(d, y):
                raise ValueError(f"spike {format_angle(x)}-{format_angle(y)} is not critical")
        rots = [vs[i:] + vs[:i] for i in range(4)]
        object.__setattr__(self, "vertices", min(rots))

    @property
    def spikes(self) -> tuple[Chord, Chord]:
        v = self.vertices
        return Chord(v[0], v[2]), Chord(v[1], v[3])

    @property
    def hull(self) -> Polygon:
        return Polygon(self.vertices)

    @property
    def edges(self) -> list[Chord]:
        v = self.vertices
        es = {Chord(v[i], v[(i + 1) % 4]) for i in range(4)}
        return sorted(e for e in es if not e.degenerate)

    @property
    def degenerate(self) -> bool:
        return len(set(self.vertices)) < 4

    @property
    def collapsing(self) -> bool:
        """Maps onto a non-degenerate leaf."""
        v = self.vertices
        return sigma(self.degree, v[0]) != sigma(self.degree, v[1])

    def __str__(self):
        return _fmt(self.vertices)


def _fmt(vs) -> str:
    return "[" + ",".join(format_angle(v) for v in vs) + "]"


def quad(*vs, degree: int = 3) -> CriticalQuadrilateral:
    return CriticalQuadrilateral(tuple(Fraction(v) for v in vs), degree)


def parse_quad(text: str, degree: int = 3) -> CriticalQuadrilateral:
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ValueError(f"quadrilateral must be bracketed: {text!r}")
    parts = t[1:-1].split(",")
    if len(parts) != 4:
        raise ValueError(f"expected four angles in {text!r}")
    return CriticalQuadrilateral(tuple(parse_angle(p) for p in parts), degree)


def strongly_linked(A: CriticalQuadrilateral, B: CriticalQuadrilateral) -> bool:
    """Vertices weakly interleave: a0 <= b0 <= a1 <= ... <= a3 <= b3 <= a0 for some numbering."""
    a = A.vertices
    for k in range(4):
        b = B.vertices[k:] + B.vertices[:k]
        chain = [a[0], b[0], a[1], b[1], a[2], b[2], a[3], b[3]]
        if cyclically_ordered(chain, strict=False):
            return True
    return False


def quads_in(C: Polygon, degree: int = 3) -> list[CriticalQuadrilateral]:
    """Candidate critical quadrilaterals inside the critical set ``C``.

    Critical chords on vertices of C, non-degenerate quadrilaterals on vertices
    of C (collapsing ones must share a pair of opposite edges with C) and the
    degenerate quadruples on all-critical triangles.
    """
    vs = C.vertices
    edges = set(C.edges)
    out = set()
    for x, y in combinations(vs, 2):
        if sigma(degree, x) == sigma(degree, y):
            out.add(CriticalQuadrilateral((x, x, y, y), degree))
    for q4 in combinations(vs, 4):
        try:
            Q = CriticalQuadrilateral(q4, degree)
        except ValueError:
            continue
        if Q.collapsing:
            v = Q.vertices
            e = [Chord(v[i], v[(i + 1) % 4]) for i in range(4)]
            if not ((e[0] in edges and e[2] in edges) or (e[1] in edges and e[3] in edges)):
                continue
        out.add(Q)
    for a, b, c in combinations(vs, 3):
        if sigma(degree, a) == sigma(degree, b) == sigma(degree, c):
            for t in ((a, a, b, c), (a, b, b, c), (a, b, c, c)):
                out.add(CriticalQuadrilateral(t, degree))
    return sorted(out, key=lambda q: q.vertices)


def _hulls_unlinked(Q1: CriticalQuadrilateral, Q2: CriticalQuadrilateral) -> bool:
    return not any(linked(e, f) for e in Q1.edges for f in Q2.edges)


def _realized(lam: Lamination, Q: CriticalQuadrilateral) -> bool:
    return all(e in lam.leaves for e in Q.edges)


def validate_portrait(lam: Lamination, Q1: CriticalQuadrilateral, Q2: CriticalQuadrilateral) -> bool:
    """Whether (Q1, Q2) is a quadratically critical portrait of ``lam``.

    Raises ValueError when a quadrilateral is not made of leaves of ``lam``.
    """
    for Q in (Q1, Q2):
        if not _realized(lam, Q):
            raise ValueError(f"{Q} is not realized in the lamination")
    return Q1 != Q2 and _hulls_unlinked(Q1, Q2)


@dataclass(frozen=True)
class MarkedLamination:
    """A cubic lamination with an ordered critical pattern (c1, c2)."""

    lamination: Lamination
    c1: Polygon
    c2: Polygon
    objects: tuple[Polygon, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        d = self.lamination.degree
        for c in (self.c1, self.c2):
            imgs = [sigma(d, v) for v in c.vertices]
            if len(set(imgs)) == len(imgs):
                raise ValueError(f"{c} is not a critical set")

    @cached_property
    def critical_objects(self) -> tuple[Polygon, ...]:
        if self.objects is not None:
            return tuple(self.objects)
        return tuple(critical_objects(self.lamination))

    @property
    def unicritical(self) -> bool:
        return self.c1 == self.c2

    def all_critical_triangles(self) -> set[Polygon]:
        d = self.lamination.degree
        return {C for C in {self.c1, self.c2, *self.critical_objects}
                if len(C) == 3 and len({sigma(d, v) for v in C.vertices}) == 1}


def portraits(M: MarkedLamination) -> list[tuple[CriticalQuadrilateral, CriticalQuadrilateral]]:
    d = M.lamination.degree
    out = []
    for Q1, Q2 in product(quads_in(M.c1, d), quads_in(M.c2, d)):
        if Q1.hull != Q2.hull and _hulls_unlinked(Q1, Q2):
            out.append((Q1, Q2))
    return out


def _share_spike(A: CriticalQuadrilateral, B: CriticalQuadrilateral) -> bool:
    return bool(set(A.spikes) & set(B.spikes))


def classify_pair(M1: MarkedLamination, M2: MarkedLamination) -> str:
    """``essentially_equal``, ``linked`` or ``unrelated``, by exhaustive portrait search.

    Shared spikes (or a shared all-critical triangle) dominate plain linkage.
    """
    if M1.lamination.degree != 3 or M2.lamination.degree != 3:
        raise ValueError("classification is defined for cubic laminations")
    if M1.all_critical_triangles() & M2.all_critical_triangles():
        return ESSENTIALLY_EQUAL
    best = UNRELATED
    P2 = portraits(M2)
    for p1 in portraits(M1):
        for p2 in P2:
            if strongly_linked(p1[0], p2[0]) and strongly_linked(p1[1], p2[1]):
                if _share_spike(p1[0], p2[0]) and _share_spike(p1[1], p2[1]):
                    return ESSENTIALLY_EQUAL
                best = LINKED
    return best


def quads_text(qs: Sequence[CriticalQuadrilateral]) -> str:
    return "\n".join(str(q) for q in qs)
