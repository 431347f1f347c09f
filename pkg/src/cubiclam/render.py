"""SVG pictures of laminations and mixed tags.

Chords are drawn either as straight segments or as hyperbolic geodesics of
the Poincare disk, i.e. circle arcs meeting the unit circle at right angles.
"""
from __future__ import annotations

import colorsys
import hashlib
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .chords import Polygon
from .lamination import Lamination
from .tags import MixedTag

HYPERBOLIC = "hyperbolic-arc"
STRAIGHT = "straight-chord"


@dataclass(frozen=True)
class RenderSpec:
    size: int = 512
    style: str = HYPERBOLIC
    stroke: str = "#1f3b73"
    stroke_width: float = 0.8
    fill: str = "none"
    labels: bool = False

    def __post_init__(self):
        if self.style not in (HYPERBOLIC, STRAIGHT):
            raise ValueError(f"unknown geodesic style {self.style!r}")
        if self.size <= 0:
            raise ValueError("size must be positive")


def geodesic(a: float, b: float) -> tuple[tuple[float, float], float] | None:
    """Center and radius of the circle orthogonal to the unit circle through angles a, b (in turns).

    Returns None for diameters.
    """
    delta = ((b - a) % 1) * 2 * math.pi
    if delta > math.pi:
        a, delta = b, 2 * math.pi - delta
    half = delta / 2
    if abs(math.cos(half)) < 1e-12:
        return None
    mid = 2 * math.pi * a + half
    dist = 1 / math.cos(half)
    return (dist * math.cos(mid), dist * math.sin(mid)), math.tan(half)


class _Canvas:
    def __init__(self, spec: RenderSpec, cx: float, cy: float):
        self.spec = spec
        self.cx, self.cy = cx, cy
        self.r = spec.size / 2 - 8

    def pt(self, t: Fraction | float) -> tuple[float, float]:
        ang = 2 * math.pi * float(t)
        return self.cx + self.r * math.cos(ang), self.cy - self.r * math.sin(ang)

    def circle_d(self) -> str:
        r, cx, cy = self.r, self.cx, self.cy
        return (f"M {cx + r:.3f} {cy:.3f} A {r:.3f} {r:.3f} 0 1 0 {cx - r:.3f} {cy:.3f} "
                f"A {r:.3f} {r:.3f} 0 1 0 {cx + r:.3f} {cy:.3f} Z")

    def edge_d(self, a: Fraction, b: Fraction) -> str:
        """Path segment from a to b, without the initial move."""
        x, y = self.pt(b)
        g = geodesic(float(a), float(b)) if self.spec.style == HYPERBOLIC else None
        if g is None:
            return f"L {x:.3f} {y:.3f}"
        rad = g[1] * self.r
        # screen y points down, so a short counterclockwise step bows inward with sweep 1
        sweep = 1 if (b - a) % 1 < Fraction(1, 2) else 0
        return f"A {rad:.3f} {rad:.3f} 0 0 {sweep} {x:.3f} {y:.3f}"

    def chord_d(self, a: Fraction, b: Fraction) -> str:
        x, y = self.pt(a)
        return f"M {x:.3f} {y:.3f} " + self.edge_d(a, b)

    def polygon_d(self, P: Polygon, dot: float = 3.0) -> str:
        vs = P.vertices
        if len(vs) == 1:
            x, y = self.pt(vs[0])
            return (f"M {x - dot:.3f} {y:.3f} A {dot} {dot} 0 1 0 {x + dot:.3f} {y:.3f} "
                    f"A {dot} {dot} 0 1 0 {x - dot:.3f} {y:.3f} Z")
        if len(vs) == 2:
            return self.chord_d(vs[0], vs[1])
        x, y = self.pt(vs[0])
        parts = [f"M {x:.3f} {y:.3f}"]
        for i in range(len(vs)):
            parts.append(self.edge_d(vs[i], vs[(i + 1) % len(vs)]))
        return " ".join(parts) + " Z"


def _doc(width: int, height: int, body: list[str]) -> str:
    head = (f'<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">')
    return "\n".join([head, *body, "</svg>"]) + "\n"


def render_lamination_svg(L: Lamination, spec: RenderSpec = RenderSpec()) -> str:
    """Unit circle plus one path per leaf, leaves in sorted order."""
    cv = _Canvas(spec, spec.size / 2, spec.size / 2)
    body = [f'<path d="{cv.circle_d()}" fill="{spec.fill}" stroke="#000" stroke-width="1"/>']
    for c in L.sorted_leaves():
        body.append(f'<path d="{cv.chord_d(c.a, c.b)}" fill="none" stroke="{spec.stroke}" '
                    f'stroke-width="{spec.stroke_width}"/>')
    if spec.labels:
        for c in L.sorted_leaves():
            for t in c.endpoints:
                x, y = cv.pt(t)
                body.append(f'<text x="{x:.3f}" y="{y:.3f}" font-size="8">{t}</text>')
    return _doc(spec.size, spec.size, body)


def tag_color(tag: MixedTag) -> str:
    """Stable color keyed on the left polygon."""
    h = int(hashlib.md5(str(tag.left).encode()).hexdigest()[:8], 16)
    r, g, b = colorsys.hls_to_rgb(h / 2**32, 0.45, 0.65)
    return f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}"


def render_tag_svg(tags: Sequence[MixedTag], spec: RenderSpec = RenderSpec()) -> str:
    """Two disks side by side: co-critical sets on the left, minor sets on the right."""
    s = spec.size
    left = _Canvas(spec, s / 2, s / 2)
    right = _Canvas(spec, 3 * s / 2, s / 2)
    body = [f'<path d="{cv.circle_d()}" fill="none" stroke="#000" stroke-width="1"/>' for cv in (left, right)]
    for t in dict.fromkeys(tags):
        col = tag_color(t)
        for cv, P in ((left, t.left), (right, t.right)):
            fill = col if len(P) != 2 else "none"
            body.append(f'<path d="{cv.polygon_d(P)}" fill="{fill}" fill-opacity="0.5" '
                        f'stroke="{col}" stroke-width="{spec.stroke_width * 2}"/>')
    return _doc(2 * s, s, body)
