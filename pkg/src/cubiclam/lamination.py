"""Finite-depth invariant laminations and the checks run against them."""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .chords import Chord, Polygon, parse_chord
from .circle import Arc, CLOSED, OPEN

__all__ = [
    "Lamination",
    "LinkedLeavesError",
    "find_linked_pair",
    "dump_lamination",
    "parse_lamination",
    "check_sibling_invariant",
    "SiblingReport",
    "LeafCheck",
    "Gap",
    "gaps",
    "critical_objects",
    "hausdorff_distance",
    "isolated_leaves",
]


class LinkedLeavesError(ValueError):
    def __init__(self, c1, c2):
        super().__init__(f"leaves {c1} and {c2} are linked")
        self.pair = (c1, c2)


def find_linked_pair(pairs: Iterable[tuple]) -> tuple | None:
    """Return some crossing pair among chords given as ``(a, b)`` with ``a < b``, else None.

    Endpoints may be shared. Runs a parenthesis sweep in O(n log n).
    """
    starts = defaultdict(list)
    ends = defaultdict(list)
    for p in set(pairs):
        starts[p[0]].append(p)
        ends[p[1]].append(p)
    stack: list[tuple] = []
    for x in sorted(set(starts) | set(ends)):
        for p in sorted(ends.get(x, ()), key=lambda p: p[0], reverse=True):
            top = stack.pop()
            if top != p:
                return (top, p)
        stack.extend(sorted(starts.get(x, ()), key=lambda p: p[1], reverse=True))
    return None


@dataclass(frozen=True)
class Lamination:
    """A finite set of pairwise unlinked non-degenerate leaves.

    ``depth`` records how many pullback rounds produced the leaves; degenerate
    chords are implicit members.
    """

    degree: int
    leaves: frozenset = field(default_factory=frozenset)
    depth: int = 0

    def __post_init__(self):
        if not isinstance(self.degree, int) or self.degree < 2:
            raise ValueError(f"degree must be >= 2, got {self.degree!r}")
        if self.depth < 0:
            raise ValueError("depth must be >= 0")
        leaves = frozenset(c if isinstance(c, Chord) else Chord(*c) for c in self.leaves)
        if any(c.degenerate for c in leaves):
            raise ValueError("degenerate chords are implicit and may not be listed")
        object.__setattr__(self, "leaves", leaves)
        bad = find_linked_pair(self.scaled[1])
        if bad is not None:
            n = self.scaled[0]
            raise LinkedLeavesError(*(Chord(Fraction(a, n), Fraction(b, n)) for a, b in bad))

    @cached_property
    def scaled(self) -> tuple[int, list[tuple[int, int]]]:
        """Common denominator N and the leaves as integer numerator pairs over N."""
        n = 1
        for c in self.leaves:
            n = math.lcm(n, c.a.denominator, c.b.denominator)
        return n, [(c.a.numerator * (n // c.a.denominator), c.b.numerator * (n // c.b.denominator))
                   for c in self.leaves]

    @classmethod
    def from_scaled(cls, degree: int, n: int, pairs: Iterable[tuple[int, int]], depth: int = 0) -> "Lamination":
        """Build from numerator pairs ``(a, b)``, ``0 <= a < b < n``, over a common ``n``."""
        pairs = sorted(set(pairs))
        leaves = []
        for a, b in pairs:
            c = object.__new__(Chord)
            object.__setattr__(c, "a", Fraction(a, n))
            object.__setattr__(c, "b", Fraction(b, n))
            leaves.append(c)
        lam = object.__new__(cls)
        object.__setattr__(lam, "degree", degree)
        object.__setattr__(lam, "leaves", frozenset(leaves))
        object.__setattr__(lam, "depth", depth)
        lam.__dict__["scaled"] = (n, pairs)
        bad = find_linked_pair(pairs)
        if bad is not None:
            raise LinkedLeavesError(*(Chord(Fraction(a, n), Fraction(b, n)) for a, b in bad))
        return lam

    def __len__(self):
        return len(self.leaves)

    def __contains__(self, c):
        return c.degenerate or c in self.leaves

    def sorted_leaves(self) -> list[Chord]:
        return sorted(self.leaves)


def dump_lamination(lam: Lamination) -> str:
    lines = [f"degree={lam.degree} depth={lam.depth}"]
    lines.extend(str(c) for c in lam.sorted_leaves())
    return "\n".join(lines) + "\n"


class ParseError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def _parse_header(text: str, lineno: int, keys: Sequence[str],
                  optional: Sequence[str] = ()) -> dict[str, int]:
    out = {}
    for tok in text.split():
        k, eq, v = tok.partition("=")
        if not eq or (k not in keys and k not in optional):
            raise ParseError(lineno, f"unexpected header token {tok!r}")
        try:
            out[k] = int(v)
        except ValueError:
            raise ParseError(lineno, f"non-integer value for {k}") from None
    missing = [k for k in keys if k not in out]
    if missing:
        raise ParseError(lineno, f"header missing {', '.join(missing)}")
    return out


def parse_lamination(text: str) -> Lamination:
    lines = text.splitlines()
    if not lines:
        raise ParseError(1, "empty input")
    hdr = _parse_header(lines[0], 1, ("degree", "depth"))
    leaves = []
    for i, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            c = parse_chord(line)
        except ValueError as e:
            raise ParseError(i, str(e)) from None
        if c.degenerate:
            raise ParseError(i, f"degenerate chord {line.strip()!r}")
        leaves.append(c)
    try:
        return Lamination(hdr["degree"], frozenset(leaves), hdr["depth"])
    except ValueError as e:
        raise ParseError(1, str(e)) from None


# -- sibling invariance ------------------------------------------------------

@dataclass(frozen=True)
class LeafCheck:
    leaf: Chord
    forward: bool
    pullback: bool
    siblings: bool

    @property
    def ok(self) -> bool:
        return self.forward and self.pullback and self.siblings


@dataclass
class SiblingReport:
    entries: list[LeafCheck]

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def failures(self) -> list[LeafCheck]:
        return [e for e in self.entries if not e.ok]

    def summary(self) -> str:
        f = self.failures
        c = [sum(not getattr(e, k) for e in f) for k in ("forward", "pullback", "siblings")]
        return (f"tested={len(self.entries)} failed={len(f)} "
                f"(1):{c[0]} (2):{c[1]} (3):{c[2]} -> {'pass' if not f else 'fail'}")


def _disjoint(p, q) -> bool:
    if set(p) & set(q):
        return False
    a, b = p
    return (a < q[0] < b) == (a < q[1] < b)


def check_sibling_invariant(lam: Lamination) -> SiblingReport:
    """Check forward invariance, pullbacks and sibling families for leaves below the last round.

    The leaves tested are the images of all leaves together with the critical
    leaves: a pullback round never creates a critical leaf, and every leaf of
    round k < depth is the image of a leaf of round k + 1.
    """
    if lam.depth == 0 or not lam.leaves:
        return SiblingReport([])
    n, pairs = lam.scaled
    d = lam.degree

    def img(p):
        x, y = d * p[0] % n, d * p[1] % n
        return (x, y) if x <= y else (y, x)

    have = set(pairs)
    by_image = defaultdict(list)
    for p in pairs:
        by_image[img(p)].append(p)
    tested = {q for q in by_image if q[0] != q[1]} & have
    for p in pairs:
        q = img(p)
        if q[0] == q[1] or q not in have:
            tested.add(p)

    entries = []
    for p in sorted(tested):
        q = img(p)
        forward = q[0] == q[1] or q in have
        pullback = p in by_image
        sib = True
        if q[0] != q[1]:
            others = [r for r in by_image[q] if r != p and _disjoint(p, r)]
            sib = any(all(_disjoint(r, s) for r, s in combinations(fam, 2))
                      for fam in combinations(others, d - 1))
        entries.append(LeafCheck(Chord(Fraction(p[0], n), Fraction(p[1], n)), forward, pullback, sib))
    return SiblingReport(entries)


# -- gaps --------------------------------------------------------------------

@dataclass(frozen=True)
class Gap:
    """A complementary region at finite depth.

    ``artifacts`` are the circle arcs on the boundary: at finite depth they
    stand in for leaves not generated yet.
    """

    boundary: Polygon
    leaf_edges: tuple[Chord, ...]
    artifacts: tuple[Arc, ...]

    @property
    def complete(self) -> bool:
        return not self.artifacts


def gaps(lam: Lamination) -> list[Gap]:
    """Faces of the leaf diagram inside the disk, by walking the planar embedding."""
    n, pairs = lam.scaled
    if not pairs:
        return [Gap(Polygon(()), (), (Arc(Fraction(0), Fraction(0), OPEN),))]
    verts = sorted({x for p in pairs for x in p})
    m = len(verts)
    nxt = {verts[i]: verts[(i + 1) % m] for i in range(m)}
    prv = {verts[i]: verts[i - 1] for i in range(m)}
    inc = defaultdict(list)
    for a, b in pairs:
        inc[a].append(b)
        inc[b].append(a)
    # rotation system: (key, kind, target); kind 0 forward arc, 1 leaf, 2 backward arc
    rot = {}
    pos = {}
    for v in verts:
        lst = [((nxt[v] - v) % n or n, 0, nxt[v])]
        lst += [((w - v) % n, 1, w) for w in inc[v]]
        lst.append(((prv[v] - v) % n or n, 2, prv[v]))
        lst.sort()
        rot[v] = lst
        for i, (_, kind, w) in enumerate(lst):
            pos[(v, kind, w)] = i
    rev_kind = {0: 2, 1: 1}
    seen = set()
    out = []
    for v in verts:
        for i, (_, kind, w) in enumerate(rot[v]):
            if kind == 2 or (v, i) in seen:
                continue
            cyc_v, leaves_, arcs = [], [], []
            cv, ci = v, i
            while (cv, ci) not in seen:
                seen.add((cv, ci))
                _, k, tw = rot[cv][ci]
                cyc_v.append(cv)
                fa, fb = Fraction(cv, n), Fraction(tw, n)
                if k == 1:
                    leaves_.append(Chord(fa, fb))
                else:
                    arcs.append(Arc(fa, fb, OPEN))
                j = pos[(tw, rev_kind[k], cv)]
                cv, ci = tw, j - 1
            out.append(Gap(Polygon(tuple(Fraction(x, n) for x in cyc_v)), tuple(leaves_), tuple(arcs)))
    return out


def _gap_is_critical(d: int, g: Gap) -> bool:
    vs = g.boundary.vertices
    if len(vs) < 3:
        return False
    if all(e.image(d).degenerate for e in g.leaf_edges):
        return True
    adjacent = set(g.boundary.edges)
    img = defaultdict(list)
    for v in vs:
        img[(d * v) % 1].append(v)
    for group in img.values():
        for x, y in combinations(group, 2):
            if Chord(x, y) not in adjacent:
                return True
    return False


def critical_objects(lam: Lamination) -> list[Polygon]:
    """Maximal critical sets: critical leaves and critical gaps bounded entirely by leaves."""
    d = lam.degree
    crit_gaps = [g.boundary for g in gaps(lam) if g.complete and _gap_is_critical(d, g)]
    covered = {e for p in crit_gaps for e in p.edges}
    leaves = [Polygon(c.endpoints) for c in lam.leaves
              if c.image(d).degenerate and c not in covered]
    return sorted(crit_gaps + leaves, key=lambda p: p.vertices)


def isolated_leaves(lam: Lamination, eps: float = 0.02) -> list[Chord]:
    """Leaves with no other leaf within ``eps`` (endpoint-wise, in turns).

    A finite-depth stand-in for perfectness: in the limit every leaf of a
    dendritic lamination is approximated by others.
    """
    n, pairs = lam.scaled
    srt = sorted(pairs)
    starts = [p[0] for p in srt]
    tol = eps * n
    out = []
    import bisect
    for p in srt:
        lo = bisect.bisect_left(starts, p[0] - tol)
        hi = bisect.bisect_right(starts, p[0] + tol)
        if not any(q != p and abs(q[1] - p[1]) <= tol for q in srt[lo:hi]):
            out.append(Chord(Fraction(p[0], n), Fraction(p[1], n)))
    return out


# -- Hausdorff distance --------------------------------------------------------

def _xy(a: Fraction) -> tuple[float, float]:
    t = 2 * math.pi * float(a)
    return (math.cos(t), math.sin(t))


def _piece(p) -> list[tuple[float, float]]:
    if isinstance(p, Chord):
        p = Polygon(p.endpoints)
    return [_xy(v) for v in p.vertices]


def _point_piece_dist(x: tuple[float, float], pts: list[tuple[float, float]]) -> float:
    if len(pts) == 1:
        return math.dist(x, pts[0])
    best = min(_seg_dist(x, pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts)))
    if len(pts) >= 3 and _inside(x, pts):
        return 0.0
    return best


def _seg_dist(x, a, b) -> float:
    ax, ay = b[0] - a[0], b[1] - a[1]
    ll = ax * ax + ay * ay
    t = 0.0 if ll == 0 else max(0.0, min(1.0, ((x[0] - a[0]) * ax + (x[1] - a[1]) * ay) / ll))
    return math.dist(x, (a[0] + t * ax, a[1] + t * ay))


def _inside(x, pts) -> bool:
    # vertices are counterclockwise
    for i in range(len(pts)):
        a, b = pts[i], pts[(i + 1) % len(pts)]
        if (b[0] - a[0]) * (x[1] - a[1]) - (b[1] - a[1]) * (x[0] - a[0]) < -1e-15:
            return False
    return True


def _directed(A: list, B: list) -> float:
    def f(x):
        return min(_point_piece_dist(x, q) for q in B)

    def fj(x):
        return [_point_piece_dist(x, q) for q in B]

    best = 0.0
    for pts in A:
        cands = list(pts)
        segs = [(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))] if len(pts) > 1 else []
        if len(pts) == 2:
            segs = segs[:1]
        for a, b in segs:
            if len(B) == 1:
                continue  # convex distance: maximum sits at a vertex
            cands.extend(_switch_points(a, b, fj))
        if len(pts) >= 3 and len(B) > 1:
            cands.extend(_interior_search(pts, f))
        best = max(best, max(f(c) for c in cands))
    return best


def _lerp(a, b, t):
    return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))


def _switch_points(a, b, fj, samples: int = 512):
    out = []
    prev_t, prev_j = 0.0, None
    for k in range(samples + 1):
        t = k / samples
        ds = fj(_lerp(a, b, t))
        j = min(range(len(ds)), key=ds.__getitem__)
        if prev_j is not None and j != prev_j:
            lo, hi = prev_t, t
            j0, j1 = prev_j, j
            for _ in range(60):
                mid = (lo + hi) / 2
                dm = fj(_lerp(a, b, mid))
                if dm[j0] <= dm[j1]:
                    lo = mid
                else:
                    hi = mid
            out.append(_lerp(a, b, (lo + hi) / 2))
        prev_t, prev_j = t, j
    return out


def _interior_search(pts, f, grid: int = 24):
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)
    starts = []
    for i in range(len(pts)):
        a, b = pts[i], pts[(i + 1) % len(pts)]
        for u in range(1, grid):
            for w in range(1, grid - u):
                s, t = u / grid, w / grid
                starts.append((cx + s * (a[0] - cx) + t * (b[0] - cx), cy + s * (a[1] - cy) + t * (b[1] - cy)))
    x = max(starts, key=f)
    step = 1.0 / grid
    while step > 1e-13:
        moved = False
        for dx, dy in ((step, 0), (-step, 0), (0, step), (0, -step)):
            y = (x[0] + dx, x[1] + dy)
            if _inside(y, pts) and f(y) > f(x):
                x, moved = y, True
                break
        if not moved:
            step /= 2
    return [x]


def hausdorff_distance(A: Sequence, B: Sequence) -> float:
    """Hausdorff distance between finite unions of points, chords and filled polygons.

    Angles embed as ``(cos 2 pi t, sin 2 pi t)``. Floating point: for probes
    and pictures only.
    """
    if isinstance(A, (Chord, Polygon)):
        A = [A]
    if isinstance(B, (Chord, Polygon)):
        B = [B]
    pa = [_piece(p) for p in A]
    pb = [_piece(p) for p in B]
    if not pa or not pb:
        raise ValueError("Hausdorff distance needs non-empty sets")
    return max(_directed(pa, pb), _directed(pb, pa))


def directed_hausdorff(A: Sequence, B: Sequence) -> float:
    """sup over a in A of dist(a, B)."""
    if isinstance(A, (Chord, Polygon)):
        A = [A]
    if isinstance(B, (Chord, Polygon)):
        B = [B]
    return _directed([_piece(p) for p in A], [_piece(p) for p in B])
