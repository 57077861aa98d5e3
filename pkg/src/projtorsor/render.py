"""SVG drawings of the ternary construction in a rational affine chart.

The hyperplane a is the line at infinity, b is the affine line
beta = 0 (absent when beta is the zero form, i.e. a = b). For chart
points x, y, z the drawing shows

* the line x v y and its parallel through z,
* the line z v y, meeting b in q (at infinity when a = b),
* the line q v x (the parallel to z v y through x when a = b),

which meet in w = (xyz). All geometry is exact over the rationals; floats
appear only when coordinates are written into the SVG.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional
from xml.sax.saxutils import escape

from .exact_algebra import RATIONAL
from .ternary_geometry import ChartConfig, chart_formula


class FigureError(ValueError):
    pass


@dataclass(frozen=True)
class FigureSpec:
    x: tuple
    y: tuple
    z: tuple
    beta: tuple = (0, 0)
    at_infinity: str = "a"
    width: int = 480
    height: int = 480
    margin: Fraction = Fraction(1, 5)
    style: dict = field(default_factory=dict, hash=False, compare=False)

    def __post_init__(self):
        for k in ("x", "y", "z", "beta"):
            v = tuple(Fraction(c) for c in getattr(self, k))
            if len(v) != 2:
                raise FigureError(f"{k} must have two coordinates")
            object.__setattr__(self, k, v)
        if self.at_infinity not in ("a", "b"):
            raise FigureError("at_infinity is 'a' or 'b'")
        if self.at_infinity == "b" and any(self.beta):
            raise FigureError("only a can be drawn at infinity when a != b")

    @property
    def config(self) -> ChartConfig:
        return ChartConfig(RATIONAL, self.beta)


DEFAULT_STYLE = {
    "construction": "#1f4e79",
    "parallel": "#8a3b12",
    "b": "#555555",
    "point": "#000000",
    "stroke_width": "1.5",
    "font_size": "14",
}


def _sub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _intersect(p, d, q, e):
    """Point of p + t d meeting q + s e; None if parallel."""
    den = _cross(d, e)
    if den == 0:
        return None
    t = _cross(_sub(q, p), e) / den
    return (p[0] + t * d[0], p[1] + t * d[1])


def construction(fig: FigureSpec) -> dict:
    """Exact points and lines of the figure.

    Returns points (x, y, z, w and q when b is finite) and lines as
    (point, direction) pairs keyed by role.
    """
    x, y, z = fig.x, fig.y, fig.z
    if len({x, y, z}) < 3:
        raise FigureError("x, y, z must be pairwise distinct")
    if _cross(_sub(x, y), _sub(z, y)) == 0:
        raise FigureError("x, y, z are collinear; the figure would be degenerate")
    cfg = fig.config
    for name, pt in (("x", x), ("y", y), ("z", z)):
        if not cfg.contains(pt):
            raise FigureError(f"{name} lies on b")
    w = chart_formula(x, y, z, cfg)
    pts = {"x": x, "y": y, "z": z, "w": w}
    d_xy, d_zy = _sub(x, y), _sub(z, y)
    lines = {"x v y": (y, d_xy), "parallel through z": (z, d_xy), "z v y": (y, d_zy)}
    if cfg.is_zero:
        lines["parallel through x"] = (x, d_zy)
    else:
        b1, b2 = fig.beta
        # b: beta = 0, direction (-b2, b1), through a point of it
        b_dir = (-b2, b1)
        b_pt = (Fraction(0), Fraction(0))
        q = _intersect(y, d_zy, b_pt, b_dir)
        if q is None:
            # z v y parallel to b: q is at infinity, the last line is parallel to b
            lines["q v x"] = (x, b_dir)
        else:
            pts["q"] = q
            lines["q v x"] = (q, _sub(x, q))
        lines["b"] = (b_pt, b_dir)
    return {"points": pts, "lines": lines}


def _clip(p, d, box):
    """Segment of the line p + t d inside the box, exactly (Liang-Barsky)."""
    (x0, y0), (x1, y1) = box
    lo, hi = None, None
    for pc, dc, mn, mx in ((p[0], d[0], x0, x1), (p[1], d[1], y0, y1)):
        if dc == 0:
            if not mn <= pc <= mx:
                return None
            continue
        t1, t2 = (mn - pc) / dc, (mx - pc) / dc
        if t1 > t2:
            t1, t2 = t2, t1
        lo = t1 if lo is None else max(lo, t1)
        hi = t2 if hi is None else min(hi, t2)
    if lo is None or lo > hi:
        return None
    return (p[0] + lo * d[0], p[1] + lo * d[1]), (p[0] + hi * d[0], p[1] + hi * d[1])


def _fmt(v: Fraction) -> str:
    return f"{float(v):.6f}"


def render_construction(fig: FigureSpec, title: Optional[str] = None) -> str:
    """SVG 1.1 document for the construction of w = (xyz)."""
    data = construction(fig)
    pts, lines = data["points"], data["lines"]
    style = {**DEFAULT_STYLE, **fig.style}
    xs = [p[0] for p in pts.values()]
    ys = [p[1] for p in pts.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys), Fraction(1))
    pad = span * fig.margin
    box = ((min(xs) - pad, min(ys) - pad), (min(xs) - pad + span + 2 * pad, min(ys) - pad + span + 2 * pad))
    scale = Fraction(min(fig.width, fig.height)) / (span + 2 * pad)

    def to_canvas(p):
        # y axis points up in the chart, down in SVG
        return ((p[0] - box[0][0]) * scale, (box[1][1] - p[1]) * scale)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{fig.width}" '
        f'height="{fig.height}" viewBox="0 0 {fig.width} {fig.height}">',
    ]
    caption = title or ("a = b at infinity: parallelogram" if fig.config.is_zero
                        else "a at infinity, b drawn")
    out.append(f"<title>{escape(caption)}</title>")
    out.append('<rect width="100%" height="100%" fill="white"/>')
    for role, (p, d) in lines.items():
        seg = _clip(p, d, box)
        if seg is None:
            continue
        (ax, ay), (bx, by) = (to_canvas(s) for s in seg)
        color = style["b"] if role == "b" else (
            style["parallel"] if role.startswith("parallel") else style["construction"])
        dash = ' stroke-dasharray="6,4"' if role == "b" else ""
        out.append(
            f'<line class="{escape(role)}" x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(bx)}" '
            f'y2="{_fmt(by)}" stroke="{color}" '
            f'stroke-width="{style["stroke_width"]}"{dash}/>'
        )
    for name, p in pts.items():
        cx, cy = to_canvas(p)
        exact = ",".join(str(c) for c in p)
        out.append(
            f'<circle id="{name}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="3.5" '
            f'fill="{style["point"]}" data-exact="{exact}"/>'
        )
        out.append(
            f'<text x="{_fmt(cx + 6)}" y="{_fmt(cy - 6)}" font-family="serif" '
            f'font-size="{style["font_size"]}" font-style="italic">{name}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
