"""SVG pictures of a point set and a matching.

The y axis is flipped (y is drawn as -y) so pictures keep the usual
mathematical orientation, and the viewBox is the bounding box of everything
drawn plus a 5% margin.
"""

from .geom import Disk, Square, vertices_xy

MARGIN = 0.05
COLOURS = {"disk": "#c0392b", "tri_down": "#2e86c1", "tri_up": "#28b463", "square": "#8e44ad"}


def _f(x):
    return f"{float(x):.6f}".rstrip("0").rstrip(".")


def _extent(points, matching):
    xs = [float(p.x) for p in points]
    ys = [float(p.y) for p in points]
    for pair in matching.pairs if matching else []:
        h = pair.rep
        if isinstance(h, Disk):
            r = h.radius
            xs += [float(h.cx) - r, float(h.cx) + r]
            ys += [float(h.cy) - r, float(h.cy) + r]
        else:
            for x, y in vertices_xy(h):
                xs.append(float(x))
                ys.append(float(y))
    if not xs:
        return 0.0, 0.0, 1.0, 1.0
    return min(xs), min(ys), max(xs), max(ys)


def _shape(h, stroke):
    style = f'fill="none" stroke="{stroke}" vector-effect="non-scaling-stroke"'
    if isinstance(h, Disk):
        return f'<circle cx="{_f(h.cx)}" cy="{_f(-float(h.cy))}" r="{_f(h.radius)}" {style}/>'
    if isinstance(h, Square):
        # top-left corner after the flip
        return (f'<rect x="{_f(h.x0)}" y="{_f(-float(h.y0 + h.s))}" '
                f'width="{_f(h.s)}" height="{_f(h.s)}" {style}/>')
    pts = " ".join(f"{_f(x)},{_f(-y)}" for x, y in vertices_xy(h))
    return f'<polygon points="{pts}" {style}/>'


def render_svg(points, matching=None, width=600):
    x0, y0, x1, y1 = _extent(points, matching)
    span = max(x1 - x0, y1 - y0) or 1.0
    pad = MARGIN * span
    vx, vy = x0 - pad, -y1 - pad
    vw, vh = (x1 - x0) + 2 * pad or 1.0, (y1 - y0) + 2 * pad or 1.0
    dot = span / 150
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
           f'height="{round(width * vh / vw)}" viewBox="{_f(vx)} {_f(vy)} {_f(vw)} {_f(vh)}">']
    for pair in matching.pairs if matching else []:
        stroke = COLOURS.get(pair.rep.kind, "black")
        out.append(_shape(pair.rep, stroke))
        p, q = points[pair.i], points[pair.j]
        out.append(f'<line x1="{_f(p.x)}" y1="{_f(-float(p.y))}" x2="{_f(q.x)}" '
                   f'y2="{_f(-float(q.y))}" stroke="black" vector-effect="non-scaling-stroke"/>')
    # zero-length round-capped segments: dots that are not circle elements
    d = " ".join(f"M{_f(p.x)} {_f(-float(p.y))}h0" for p in points)
    if d:
        out.append(f'<path d="{d}" stroke="black" stroke-width="{_f(dot)}" '
                   f'stroke-linecap="round"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
