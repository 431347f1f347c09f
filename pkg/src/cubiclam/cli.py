"""Command line: ``cubiclam <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 malformed input.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .chords import parse_polygon
from .lamination import ParseError, check_sibling_invariant, dump_lamination, parse_lamination
from .pullback import dump_portrait, enumerate_dendritic_portraits, lavaurs_qml, parse_portrait, pullback_generate
from .quadcrit import MarkedLamination
from .render import HYPERBOLIC, STRAIGHT, RenderSpec, render_lamination_svg, render_tag_svg
from .tags import family_disjoint_or_equal, mixed_tag, parse_tag

OK, FAIL, BAD_INPUT = 0, 1, 2


def _write(out: str | None, text: str) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise ValueError(f"cannot read {path}: {e.strerror}") from None


def cmd_pullback(a) -> int:
    P, _ = parse_portrait(_read(a.portrait))
    if a.degree is not None and a.degree != P.degree:
        raise ValueError(f"--degree {a.degree} does not match the portrait's degree {P.degree}")
    _write(a.out, dump_lamination(pullback_generate(P, a.depth)))
    return OK


def cmd_enumerate(a) -> int:
    if a.degree != 3:
        raise ValueError("the enumerator builds cubic laminations only (--degree 3)")
    found = enumerate_dendritic_portraits(a.max_preperiod, a.max_period, a.count, depth=a.depth, seed=a.seed)
    out = Path(a.out)
    out.mkdir(parents=True, exist_ok=True)
    names: dict[int, str] = {}
    rows = []
    for P, M in found:
        key = id(M.lamination)
        if key not in names:
            names[key] = f"lam_{len(names):03d}.lam"
            (out / names[key]).write_text(dump_lamination(M.lamination))
            (out / names[key].replace(".lam", ".portrait")).write_text(dump_portrait(P, a.seed))
        rows.append(f"{names[key]}; {M.c1}; {M.c2}")
    (out / "patterns.txt").write_text("\n".join(rows) + "\n")
    print(f"{len(names)} laminations, {len(rows)} marked, written to {out}")
    return OK


def load_corpus(directory: str | Path) -> list[MarkedLamination]:
    """Marked laminations listed in ``patterns.txt`` as ``<file>; <c1>; <c2>``."""
    d = Path(directory)
    cache = {}
    out = []
    for i, ln in enumerate(_read(str(d / "patterns.txt")).splitlines(), 1):
        if not ln.strip():
            continue
        parts = [p.strip() for p in ln.split(";")]
        if len(parts) != 3:
            raise ParseError(i, "expected '<file>; <c1>; <c2>'")
        if parts[0] not in cache:
            try:
                cache[parts[0]] = parse_lamination(_read(str(d / parts[0])))
            except ParseError as e:
                raise ParseError(e.line, f"{parts[0]}: {e}") from None
        try:
            out.append(MarkedLamination(cache[parts[0]], parse_polygon(parts[1]), parse_polygon(parts[2])))
        except ValueError as e:
            raise ParseError(i, str(e)) from None
    return out


def cmd_tags(a) -> int:
    family = load_corpus(a.corpus)
    tags = [mixed_tag(M) for M in family]
    rep = family_disjoint_or_equal(tags)
    lines = rep.lines()
    summary = (f"disjoint={rep.count('disjoint')} equal={rep.count('equal')} "
               f"overlap={rep.count('overlap')}")
    if a.out:
        out = Path(a.out)
        out.mkdir(parents=True, exist_ok=True)
        for i, t in enumerate(tags):
            (out / f"tag_{i:03d}.txt").write_text(t.dump())
        (out / "report.txt").write_text("\n".join(lines + [summary]) + "\n")
    for i, j in rep.overlaps:
        print(f"OVERLAP pair {i} {j}:\n{tags[i].dump()}{tags[j].dump()}", file=sys.stderr)
    print(summary)
    return OK if rep.ok else FAIL


def cmd_qml(a) -> int:
    _write(a.out, dump_lamination(lavaurs_qml(a.max_period)))
    return OK


def cmd_check(a) -> int:
    lam = parse_lamination(_read(a.lamination))
    rep = check_sibling_invariant(lam)
    for f in rep.failures:
        print(f"leaf {f.leaf}: forward={f.forward} pullback={f.pullback} siblings={f.siblings}")
    print(rep.summary())
    return OK if rep.passed else FAIL


def _spec(a) -> RenderSpec:
    return RenderSpec(size=a.size, style=a.style)


def cmd_render(a) -> int:
    _write(a.out, render_lamination_svg(parse_lamination(_read(a.lamination)), _spec(a)))
    return OK


def cmd_render_tag(a) -> int:
    tags = []
    for path in a.tags:
        try:
            tags.append(parse_tag(_read(path)))
        except ValueError as e:
            raise ValueError(f"{path}: {e}") from None
    _write(a.out, render_tag_svg(tags, _spec(a)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubiclam", description="Invariant laminations, portraits and mixed tags.")
    p.add_argument("-v", "--verbose", action="store_true", help="log skipped candidates")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("pullback", help="generate a lamination from a portrait file")
    s.add_argument("portrait")
    s.add_argument("--degree", type=int, help="expected degree, checked against the portrait header")
    s.add_argument("--depth", type=int, default=4)
    s.add_argument("--out")
    s.set_defaults(func=cmd_pullback)

    s = sub.add_parser("enumerate", help="write a corpus of cubic dendritic laminations")
    s.add_argument("--degree", type=int, default=3)
    s.add_argument("--max-preperiod", type=int, default=2)
    s.add_argument("--max-period", type=int, default=2)
    s.add_argument("--count", type=int, default=10, help="number of distinct laminations")
    s.add_argument("--depth", type=int, default=8)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("tags", help="mixed tags and the disjoint-or-equal report of a corpus")
    s.add_argument("corpus")
    s.add_argument("--out")
    s.set_defaults(func=cmd_tags)

    s = sub.add_parser("qml", help="quadratic minor chords up to a period")
    s.add_argument("--max-period", type=int, default=6)
    s.add_argument("--out")
    s.set_defaults(func=cmd_qml)

    s = sub.add_parser("check", help="verify sibling invariance of a lamination dump")
    s.add_argument("lamination")
    s.set_defaults(func=cmd_check)

    for name, fn, arg, nargs in (("render", cmd_render, "lamination", None),
                                 ("render-tag", cmd_render_tag, "tags", "+")):
        s = sub.add_parser(name, help=f"SVG of {'a lamination' if nargs is None else 'mixed tags'}")
        s.add_argument(arg, nargs=nargs)
        s.add_argument("--out")
        s.add_argument("--style", choices=[HYPERBOLIC, STRAIGHT], default=HYPERBOLIC)
        s.add_argument("--size", type=int, default=512)
        s.set_defaults(func=fn)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return BAD_INPUT if e.code else OK
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING, format="%(message)s")
    try:
        return a.func(a)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return BAD_INPUT
    except Exception as e:  # noqa: BLE001 - the exit-code contract is total
        print(f"internal error: {e!r}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
