"""Static SVG scatter plots of persistence diagrams (no plotting dependency)."""
from __future__ import annotations

from xml.sax.saxutils import escape

from .complex import DESCENDING
from .persistence import INF, PersistenceDiagram

SIZE = 600
MARGIN = 60
COLORS = {0: "#1f5fbf", 1: "#d62728", 2: "#2ca02c", 3: "#9467bd"}


def _range(diagrams):
    vals = [float(v) for d in diagrams for p in d.points for v in p if v != INF]
    if not vals:
        return 0.0, 1.0
    lo, hi = min(vals), max(vals)
    if hi - lo < 1e-12:
        lo, hi = lo - 0.5, hi + 0.5
    pad = 0.08 * (hi - lo)
    return lo - pad, hi + pad


def render_svg(diagrams: list[PersistenceDiagram], title: str = "") -> str:
    """Birth on x, death on y; never-dying points drawn as arrows at the edge."""
    lo, hi = _range(diagrams)
    span = SIZE - 2 * MARGIN
    descending = bool(diagrams) and diagrams[0].direction == DESCENDING

    def sx(v):
        return MARGIN + (float(v) - lo) / (hi - lo) * span

    def sy(v):
        return SIZE - MARGIN - (float(v) - lo) / (hi - lo) * span

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
           f'viewBox="0 0 {SIZE} {SIZE}">',
           '<rect width="100%" height="100%" fill="white"/>',
           f'<g class="axes" stroke="black" stroke-width="1">'
           f'<line x1="{MARGIN}" y1="{SIZE - MARGIN}" x2="{SIZE - MARGIN}" y2="{SIZE - MARGIN}"/>'
           f'<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" y2="{SIZE - MARGIN}"/></g>',
           f'<line class="diagonal" x1="{sx(lo):.1f}" y1="{sy(lo):.1f}" x2="{sx(hi):.1f}" y2="{sy(hi):.1f}" '
           'stroke="#888" stroke-dasharray="4 4"/>']
    for k in range(5):
        v = lo + (hi - lo) * k / 4
        out.append(f'<text x="{sx(v):.1f}" y="{SIZE - MARGIN + 18}" font-size="11" '
                   f'text-anchor="middle">{v:.2f}</text>')
        out.append(f'<text x="{MARGIN - 8}" y="{sy(v) + 4:.1f}" font-size="11" '
                   f'text-anchor="end">{v:.2f}</text>')
    out.append(f'<text x="{SIZE / 2}" y="{SIZE - 15}" font-size="13" text-anchor="middle">birth</text>')
    out.append(f'<text x="18" y="{SIZE / 2}" font-size="13" text-anchor="middle" '
               f'transform="rotate(-90 18 {SIZE / 2})">death</text>')
    if title:
        out.append(f'<text x="{SIZE / 2}" y="30" font-size="15" text-anchor="middle">{escape(title)}</text>')

    # arrows point off the edge where the class would die
    edge_y = SIZE - MARGIN if descending else MARGIN
    tip = 12 if descending else -12
    for d in diagrams:
        color = COLORS.get(d.dimension, "black")
        for b, dth in d.points:
            x = sx(b)
            if dth == INF:
                y0 = edge_y - 2 * tip
                out.append(f'<path class="arrow" data-dim="{d.dimension}" '
                           f'd="M{x:.1f},{y0:.1f} L{x:.1f},{edge_y:.1f} M{x - 5:.1f},{edge_y - tip / 2:.1f} '
                           f'L{x:.1f},{edge_y:.1f} L{x + 5:.1f},{edge_y - tip / 2:.1f}" '
                           f'stroke="{color}" stroke-width="2" fill="none"/>')
            else:
                out.append(f'<circle class="point" data-dim="{d.dimension}" cx="{x:.1f}" '
                           f'cy="{sy(dth):.1f}" r="4" fill="{color}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
