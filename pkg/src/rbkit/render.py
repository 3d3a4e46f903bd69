"""ASCII and SVG drawings of diagrams in the usual two-row layout."""

from __future__ import annotations

from .diagrams import Diagram, vertex_name

GAP = 40.0
ROW_SEP = 60.0
MARGIN = 20.0
ARC_DEPTH = 0.35


def _arc_levels(pairs: list[tuple[int, int]]) -> dict[tuple[int, int], int]:
    """Nesting depth of each arc; an arc sits one level outside every arc it encloses."""
    levels: dict[tuple[int, int], int] = {}
    for a, b in sorted(pairs, key=lambda e: e[1] - e[0]):
        inner = [levels[e] for e in levels if a <= e[0] and e[1] <= b]
        levels[(a, b)] = 1 + max(inner, default=0)
    return levels


def render_ascii(d: Diagram) -> str:
    """Text drawing: vertex rows ``o`` (or ``.`` when isolated), arcs as ``+--+``."""
    k = d.k
    if k == 0:
        return ""
    width = 2 * k - 1
    top = [(a, b) for a, b in d.top_horizontals()]
    bottom = [(a - k, b - k) for a, b in d.bottom_horizontals()]
    top_lv, bot_lv = _arc_levels(top), _arc_levels(bottom)
    top_h, bot_h = max(top_lv.values(), default=0), max(bot_lv.values(), default=0)
    bent = sorted(((a, b - k) for a, b in d.vertical_edges() if a != b - k))
    straight = [a for a, b in d.vertical_edges() if a == b - k]
    mid_h = max(1, len(bent))
    height = top_h + mid_h + bot_h
    grid = [[" "] * width for _ in range(height)]

    def put(r: int, c: int, ch: str) -> None:
        if grid[r][c] == " " or ch == "|":
            grid[r][c] = ch

    for (a, b), lv in top_lv.items():
        for r in range(lv - 1):
            put(r, 2 * a, "|")
            put(r, 2 * b, "|")
        for c in range(2 * a + 1, 2 * b):
            put(lv - 1, c, "-")
        grid[lv - 1][2 * a] = grid[lv - 1][2 * b] = "+"
    for (a, b), lv in bot_lv.items():
        for r in range(height - lv + 1, height):
            put(r, 2 * a, "|")
            put(r, 2 * b, "|")
        for c in range(2 * a + 1, 2 * b):
            put(height - lv, c, "-")
        grid[height - lv][2 * a] = grid[height - lv][2 * b] = "+"
    for c in straight:
        for r in range(height):
            put(r, 2 * c, "|")
    for j, (a, b) in enumerate(bent):
        turn = top_h + j
        for r in range(turn):
            put(r, 2 * a, "|")
        for r in range(turn + 1, height):
            put(r, 2 * b, "|")
        lo, hi = sorted((2 * a, 2 * b))
        for c in range(lo + 1, hi):
            put(turn, c, "-")
        grid[turn][2 * a] = grid[turn][2 * b] = "+"

    def vertex_row(offset: int) -> str:
        return " ".join("." if d.match[offset + c] < 0 else "o" for c in range(k))

    lines = [vertex_row(0)] + ["".join(row).rstrip() for row in grid] + [vertex_row(k)]
    return "\n".join(lines) + "\n"


def _xy(v: int, k: int) -> tuple[float, float]:
    col = v if v < k else v - k
    return MARGIN + col * GAP, MARGIN if v < k else MARGIN + ROW_SEP


def render_svg(d: Diagram) -> str:
    """SVG drawing; each edge is a ``path`` tagged with ``data-edge`` naming its endpoints."""
    k = d.k
    w = 2 * MARGIN + max(k - 1, 0) * GAP
    h = 2 * MARGIN + ROW_SEP
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:g}" height="{h:g}" '
        f'viewBox="0 0 {w:g} {h:g}">',
        f'<rect x="{MARGIN:g}" y="{MARGIN:g}" width="{max(k - 1, 0) * GAP:g}" '
        f'height="{ROW_SEP:g}" fill="#e6e6e6" stroke="none"/>',
    ]
    for a, b in d.edges:
        (x1, y1), (x2, y2) = _xy(a, k), _xy(b, k)
        name = f"{vertex_name(a, k)} {vertex_name(b, k)}"
        if y1 != y2:
            geom = f"M {x1:g} {y1:g} L {x2:g} {y2:g}"
        else:
            dy = ARC_DEPTH * GAP * (1 if y1 == MARGIN else -1)
            geom = (f"M {x1:g} {y1:g} C {x1:g} {y1 + dy:g} {x2:g} {y2 + dy:g} "
                    f"{x2:g} {y2:g}")
        out.append(f'<path data-edge="{name}" d="{geom}" fill="none" stroke="black" '
                   f'stroke-width="2"/>')
    for v in range(2 * k):
        x, y = _xy(v, k)
        out.append(f'<circle data-vertex="{vertex_name(v, k)}" cx="{x:g}" cy="{y:g}" r="4" '
                   f'fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(d: Diagram, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(d)
    if fmt == "svg":
        return render_svg(d)
    raise ValueError(f"unknown format {fmt!r}")
