"""SVG rendering of walls in the (beta, alpha) half-plane.

Exact values are converted to floats only here, for drawing.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional

from .walls import SEMICIRCLE, VERTICAL, Region, Wall

WIDTH = 600
MARGIN = 40


def _f(x: float) -> str:
    s = f"{x:.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


class Transform:
    """x = MARGIN + scale*(beta - beta_min), y = MARGIN + scale*(alpha_max - alpha)."""

    def __init__(self, region: Region) -> None:
        span = region.beta_max - region.beta_min
        if span <= 0 or region.alpha_max <= 0:
            raise ValueError(f"cannot draw empty region {region}")
        self.region = region
        self.scale = Fraction(WIDTH) / span
        self.height = float(self.scale * region.alpha_max)

    def x(self, beta) -> float:
        return MARGIN + float(self.scale * (Fraction(beta) - self.region.beta_min))

    def y(self, alpha) -> float:
        return MARGIN + float(self.scale * (self.region.alpha_max - Fraction(alpha)))

    def metadata(self) -> dict:
        return {
            "x": {"scale": str(self.scale), "offset": str(MARGIN - self.scale * self.region.beta_min)},
            "y": {"scale": str(-self.scale), "offset": str(MARGIN + self.scale * self.region.alpha_max)},
            "region": {
                "beta_min": str(self.region.beta_min),
                "beta_max": str(self.region.beta_max),
                "alpha_max": str(self.region.alpha_max),
            },
        }


def _wall_path(w: Wall, t: Transform) -> Optional[str]:
    if w.kind == VERTICAL:
        x = _f(t.x(w.beta))
        return (
            f'<path class="wall vertical" d="M {x} {_f(t.y(0))} L {x} {_f(t.y(t.region.alpha_max))}" '
            f'stroke="#c0392b" stroke-width="1.5" fill="none"/>'
        )
    if w.kind == SEMICIRCLE:
        r = math.sqrt(w.radius_sq)
        c = float(w.center)
        x0 = MARGIN + float(t.scale) * (c - r - float(t.region.beta_min))
        x1 = MARGIN + float(t.scale) * (c + r - float(t.region.beta_min))
        rr = _f(float(t.scale) * r)
        y = _f(t.y(0))
        return (
            f'<path class="wall semicircle" d="M {_f(x0)} {y} A {rr} {rr} 0 0 1 {_f(x1)} {y}" '
            f'stroke="#2c3e50" stroke-width="1" fill="none"/>'
        )
    return None


def plot_walls(walls: Iterable[Wall], region: Region, out_path: str | Path | None = None) -> str:
    """Render walls as an SVG 1.1 document; one path element per wall."""
    t = Transform(region)
    w_px = WIDTH + 2 * MARGIN
    h_px = t.height + 2 * MARGIN
    lines = [
        '<?xml version="1.0" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(w_px)}" height="{_f(h_px)}" '
        f'viewBox="0 0 {_f(w_px)} {_f(h_px)}">',
        f"<metadata>{json.dumps(t.metadata(), sort_keys=True)}</metadata>",
        "<defs>",
        f'<clipPath id="region"><rect x="{MARGIN}" y="{MARGIN}" width="{WIDTH}" height="{_f(t.height)}"/></clipPath>',
        "</defs>",
    ]
    # axes: beta along alpha = 0, alpha at beta = 0 when visible
    y0 = _f(t.y(0))
    lines.append(f'<line class="axis beta" x1="{MARGIN}" y1="{y0}" x2="{MARGIN + WIDTH}" y2="{y0}" stroke="black"/>')
    ax_beta = Fraction(0) if region.beta_min <= 0 <= region.beta_max else region.beta_min
    xa = _f(t.x(ax_beta))
    lines.append(
        f'<line class="axis alpha" x1="{xa}" y1="{y0}" x2="{xa}" y2="{_f(t.y(region.alpha_max))}" stroke="black"/>'
    )
    lines.append(f'<text x="{MARGIN + WIDTH + 4}" y="{y0}" font-size="12">&#946;</text>')
    lines.append(f'<text x="{xa}" y="{MARGIN - 6}" font-size="12">&#945;</text>')
    for b in (region.beta_min, region.beta_max):
        lines.append(f'<text x="{_f(t.x(b))}" y="{_f(t.y(0) + 14)}" font-size="10">{b}</text>')
    lines.append('<g clip-path="url(#region)">')
    for w in walls:
        p = _wall_path(w, t)
        if p is not None:
            lines.append(p)
    lines.append("</g>")
    lines.append("</svg>")
    doc = "\n".join(lines) + "\n"
    if out_path is not None:
        Path(out_path).write_text(doc)
    return doc
