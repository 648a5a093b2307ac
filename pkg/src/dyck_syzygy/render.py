"""SVG drawings of Dyck patterns over a partition.

Same conventions as the usual hand-drawn figures: a dotted grid, the
partition outlined box by box, each path as a thick polyline through the
box centres and each bullet as a filled disk.  Row 1 is drawn at the bottom.
"""
from __future__ import annotations

from typing import Iterable

from .dyck import DyckPattern, support
from .partitions import Partition

UNIT = 24
MARGIN = 12


def pattern_svg(lam: Iterable[int], pattern: DyckPattern, rows: int | None = None, cols: int | None = None) -> str:
    lam = Partition(lam)
    cells = support(pattern) | {(x, y) for y, length in enumerate(lam, 1) for x in range(1, length + 1)}
    cols = max([cols or 0] + [x for x, _ in cells]) + 1
    rows = max([rows or 0] + [y for _, y in cells]) + 1
    width, height = cols * UNIT + 2 * MARGIN, rows * UNIT + 2 * MARGIN

    def px(x: float) -> float:
        return MARGIN + x * UNIT

    def py(y: float) -> float:
        return MARGIN + (rows - y) * UNIT

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" '
        f'width="{width}" height="{height}">',
        '<g stroke="#999" stroke-width="1" stroke-dasharray="2,3">',
    ]
    for y in range(rows + 1):
        out.append(f'<line x1="{px(0)}" y1="{py(y)}" x2="{px(cols)}" y2="{py(y)}"/>')
    for x in range(cols + 1):
        out.append(f'<line x1="{px(x)}" y1="{py(0)}" x2="{px(x)}" y2="{py(rows)}"/>')
    out.append("</g>")
    out.append('<g fill="none" stroke="black" stroke-width="3">')
    for y, length in enumerate(lam, 1):
        for x in range(1, length + 1):
            out.append(f'<rect x="{px(x - 1)}" y="{py(y)}" width="{UNIT}" height="{UNIT}"/>')
    out.append("</g>")
    out.append('<g fill="none" stroke="red" stroke-width="8" stroke-linecap="round" stroke-linejoin="round">')
    for path in pattern.paths:
        centres = [(px(x - 0.5), py(y - 0.5)) for x, y in path.cells]
        if len(centres) == 1:
            cx, cy = centres[0]
            centres = [(cx - UNIT * 0.2, cy), (cx + UNIT * 0.2, cy)]
        points = " ".join(f"{a:g},{b:g}" for a, b in centres)
        out.append(f'<polyline points="{points}"/>')
    out.append("</g>")
    out.append('<g fill="green" stroke="black" stroke-width="1">')
    for x, y in sorted(pattern.bullets, key=lambda b: (b[1], b[0])):
        out.append(f'<circle cx="{px(x - 0.5):g}" cy="{py(y - 0.5):g}" r="{UNIT * 0.15:g}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
