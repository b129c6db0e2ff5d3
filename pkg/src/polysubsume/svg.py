"""Static SVG figures: original polygon dashed, subsuming polygon solid."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence, Tuple
from xml.sax.saxutils import quoteattr

from .polygon import as_region


def _ring_path(ring, fy) -> str:
    pts = [(float(v[0]), fy(float(v[1]))) for v in ring.vertices]
    head = "M{:.6g},{:.6g}".format(*pts[0])
    return head + "".join(" L{:.6g},{:.6g}".format(x, y) for x, y in pts[1:]) + " Z"


def _region_path(q, fy) -> str:
    return " ".join(_ring_path(r, fy) for r in q.rings())


def render_svg(before, after=None, path: Optional[str] = None,
               support: Iterable[Tuple[Sequence, Sequence]] = (), width: int = 800) -> str:
    """SVG text for ``before`` (dashed) and optionally ``after`` (solid, even-odd fill).

    ``support`` segments are drawn dashed and light.  The view box fits all
    geometry with a 5% margin; y is flipped so the figure reads like a plot.
    """
    regions = [as_region(before)] + ([as_region(after)] if after is not None else [])
    xs = [float(v[0]) for q in regions for r in q.rings() for v in r.vertices]
    ys = [float(v[1]) for q in regions for r in q.rings() for v in r.vertices]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    w = max(x1 - x0, 1e-9)
    h = max(y1 - y0, 1e-9)
    mx, my = 0.05 * w, 0.05 * h

    def fy(y):
        return y0 + y1 - y

    vb = f"{x0 - mx:.6g} {y0 - my:.6g} {w + 2 * mx:.6g} {h + 2 * my:.6g}"
    stroke = max(w, h) / 400.0
    height = int(round(width * (h + 2 * my) / (w + 2 * mx)))
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{max(height, 1)}" viewBox="{vb}">']
    if after is not None:
        out.append(f'<path d={quoteattr(_region_path(regions[1], fy))} fill="#cfe3f5" '
                   f'fill-rule="evenodd" stroke="#1f4e79" stroke-width="{stroke:.6g}"/>')
    fill = "none" if after is not None else "#eeeeee"
    out.append(f'<path d={quoteattr(_region_path(regions[0], fy))} fill="{fill}" fill-rule="evenodd" '
               f'stroke="#333333" stroke-width="{stroke:.6g}" stroke-dasharray="{4 * stroke:.6g} {3 * stroke:.6g}"/>')
    for a, b in support:
        out.append(f'<line x1="{float(a[0]):.6g}" y1="{fy(float(a[1])):.6g}" x2="{float(b[0]):.6g}" '
                   f'y2="{fy(float(b[1])):.6g}" stroke="#999999" stroke-width="{stroke / 2:.6g}" '
                   f'stroke-dasharray="{2 * stroke:.6g} {2 * stroke:.6g}"/>')
    out.append("</svg>")
    text = "\n".join(out) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
