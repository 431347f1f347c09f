"""Exact angles on the circle R/Z and circular-order predicates.

Angles are plain :class:`fractions.Fraction` values reduced into ``[0, 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Angle = Fraction
AngleLike = Union[Fraction, int, str]

OPEN = "open"
CLOSED = "closed"
HALF_OPEN_LEFT = "half-open-left"    # (start, end]
HALF_OPEN_RIGHT = "half-open-right"  # [start, end)
_CLOSEDNESS = (OPEN, CLOSED, HALF_OPEN_LEFT, HALF_OPEN_RIGHT)


def angle(x: AngleLike, q: int | None = None) -> Fraction:
    """Build a reduced angle. ``angle(4, 6) == angle("2/3") == Fraction(2, 3)``."""
    if q is not None:
        x = Fraction(x, q)
    elif isinstance(x, str):
        x = parse_angle(x)
    else:
        x = Fraction(x)
    return x % 1


def parse_angle(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty angle")
    if "/" in text:
        p, _, q = text.partition("/")
        try:
            p, q = int(p), int(q)
        except ValueError:
            raise ValueError(f"malformed angle {text!r}") from None
        if q <= 0:
            raise ValueError(f"non-positive denominator in {text!r}")
        return Fraction(p, q) % 1
    try:
        return Fraction(int(text)) % 1
    except ValueError:
        raise ValueError(f"malformed angle {text!r}") from None


def format_angle(a: Fraction) -> str:
    a = a % 1
    return "0" if a == 0 else f"{a.numerator}/{a.denominator}"


def _check_degree(d: int) -> None:
    if not isinstance(d, int) or d < 2:
        raise ValueError(f"degree must be an integer >= 2, got {d!r}")


def sigma(d: int, a: Fraction) -> Fraction:
    """The angle-multiplication map a -> d*a mod 1."""
    _check_degree(d)
    return (d * a) % 1


def preimages(d: int, a: Fraction) -> list[Fraction]:
    """All d preimages of ``a`` under sigma, ascending."""
    _check_degree(d)
    a = a % 1
    return [(a + k) / d for k in range(d)]


def ccw_offset(base: Fraction, x: Fraction) -> Fraction:
    """Counterclockwise distance from ``base`` to ``x`` in [0, 1)."""
    return (x - base) % 1


def cyclically_ordered(angles: Sequence[Fraction], strict: bool = True) -> bool:
    """True iff ``angles`` go once around the circle in increasing order from angles[0].

    In the non-strict case an entry equal to ``angles[0]`` that comes after the
    walk has left the starting point counts as a full turn, so the closing
    chain ``a0 <= ... <= a0`` is accepted.
    """
    if len(angles) < 3:
        raise ValueError("need at least three angles")
    base = angles[0]
    prev = Fraction(0)
    moved = False
    for x in angles[1:]:
        off = ccw_offset(base, x)
        if off == 0:
            if strict:
                return False
            off = Fraction(1) if moved else Fraction(0)
        if strict and off <= prev:
            return False
        if off < prev:
            return False
        if off > 0:
            moved = True
        prev = off
    return True


def in_open_arc(x: Fraction, start: Fraction, end: Fraction) -> bool:
    """x strictly inside the positively oriented arc (start, end).

    When start == end the arc is the whole circle minus that point.
    """
    if start == end:
        return x != start
    return 0 < ccw_offset(start, x) < ccw_offset(start, end)


@dataclass(frozen=True)
class Arc:
    """Positively oriented arc from ``start`` to ``end``.

    ``start == end`` denotes the circle punctured at that point (length 1);
    a single-vertex polygon has exactly this hole.
    """

    start: Fraction
    end: Fraction
    closedness: str = OPEN

    def __post_init__(self):
        if self.closedness not in _CLOSEDNESS:
            raise ValueError(f"unknown closedness {self.closedness!r}")
        object.__setattr__(self, "start", self.start % 1)
        object.__setattr__(self, "end", self.end % 1)

    @property
    def length(self) -> Fraction:
        if self.start == self.end:
            return Fraction(1)
        return ccw_offset(self.start, self.end)

    def __contains__(self, x: Fraction) -> bool:
        x = x % 1
        if x == self.start:
            return self.closedness in (CLOSED, HALF_OPEN_RIGHT)
        if x == self.end:
            return self.closedness in (CLOSED, HALF_OPEN_LEFT)
        return in_open_arc(x, self.start, self.end)


def sort_angles(xs: Iterable[Fraction]) -> list[Fraction]:
    return sorted({x % 1 for x in xs})
