"""Independent floating-point and brute-force routes used to cross-check the exact code."""
from __future__ import annotations

import math
from itertools import combinations

TOL = 1e-9


def xy(t) -> tuple[float, float]:
    a = 2 * math.pi * float(t)
    return math.cos(a), math.sin(a)


def orient(p, q, r) -> float:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def segments_cross(a, b, c, d, tol: float = TOL) -> bool:
    """Proper crossing of segments ab and cd in the plane; touching does not count."""
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    return o1 * o2 < -tol * tol and o3 * o4 < -tol * tol and min(abs(o1), abs(o2), abs(o3), abs(o4)) > tol


def chords_cross(c1, c2) -> bool:
    return segments_cross(xy(c1[0]), xy(c1[1]), xy(c2[0]), xy(c2[1]))


def cyclic_float(angles) -> bool:
    """Strict circular order by sorting float offsets from the first entry."""
    base = float(angles[0])
    offs = [(float(x) - base) % 1.0 for x in angles[1:]]
    return all(o > 0 for o in offs) and all(p < q for p, q in zip(offs, offs[1:]))


def hulls_meet(P, Q, tol: float = TOL) -> bool:
    """Closed convex hulls of two circle-point sets meet, by a separating-axis search."""
    A = [xy(v) for v in P]
    B = [xy(v) for v in Q]
    axes = []
    for S in (A, B):
        for p, q in combinations(S, 2):
            axes.append((q[1] - p[1], p[0] - q[0]))
    for p in A:
        for q in B:
            axes.append((q[0] - p[0], q[1] - p[1]))
    for ax in axes:
        n = math.hypot(*ax)
        if n < 1e-15:
            continue
        u = (ax[0] / n, ax[1] / n)
        pa = [p[0] * u[0] + p[1] * u[1] for p in A]
        pb = [p[0] * u[0] + p[1] * u[1] for p in B]
        if max(pa) < min(pb) - tol or max(pb) < min(pa) - tol:
            return False
    return True


def sample_segment(p, q, k: int) -> list[tuple[float, float]]:
    return [(p[0] + (q[0] - p[0]) * i / k, p[1] + (q[1] - p[1]) * i / k) for i in range(k + 1)]


def sampled_hausdorff(A, B) -> float:
    def d(x, ys):
        return min(math.hypot(x[0] - y[0], x[1] - y[1]) for y in ys)
    return max(max(d(x, B) for x in A), max(d(y, A) for y in B))


def cocritical_brute(C) -> list:
    """Points of the longest open hole of C (by float length) whose tripled angle is a tripled vertex."""
    vs = sorted(float(v) for v in C)
    holes = [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]
    start, end = max(holes, key=lambda h: (h[1] - h[0]) % 1.0 or 1.0)
    targets = {round((3 * float(v)) % 1.0, 12) % 1.0 for v in C}
    out = []
    for t in targets:
        for k in range(3):
            x = (t + k) / 3
            off, span = (x - start) % 1.0, (end - start) % 1.0
            if 1e-12 < off < span - 1e-12:
                out.append(x)
    return sorted(out)


def svg_arc_center(x1, y1, x2, y2, r, large, sweep):
    """Center of an SVG elliptical arc with rx = ry = r (endpoint-to-center conversion)."""
    dx, dy = (x1 - x2) / 2, (y1 - y2) / 2
    rad = max(r * r - dx * dx - dy * dy, 0.0)
    coef = math.sqrt(rad / (dx * dx + dy * dy))
    if large == sweep:
        coef = -coef
    cxp, cyp = coef * dy, -coef * dx
    return cxp + (x1 + x2) / 2, cyp + (y1 + y2) / 2


def complete_gaps_brute(pairs, max_len: int = 6) -> set:
    """Vertex cycles of length 3..max_len all of whose sides are leaves and no diagonal is a leaf."""
    leaves = set(pairs)
    adj = {}
    for a, b in leaves:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    found = set()
    for start in adj:
        stack = [(start, (start,))]
        while stack:
            v, path = stack.pop()
            for w in adj[v]:
                if w == start and len(path) >= 3:
                    vs = tuple(sorted(path))
                    ring = {tuple(sorted((vs[i], vs[(i + 1) % len(vs)]))) for i in range(len(vs))}
                    diags = {tuple(sorted(p)) for p in combinations(vs, 2)} - ring
                    if ring <= leaves and not diags & leaves:
                        found.add(vs)
                elif w not in path and w > start and len(path) < max_len:
                    stack.append((w, path + (w,)))
    return found
