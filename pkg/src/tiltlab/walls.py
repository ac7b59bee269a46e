"""Numerical walls for a class v in the (alpha, beta) upper half-plane.

For classes v, w write (r, c, d) = (ch0, H.ch1^B, ch2^B) and D = H^2. The equation
nu(v) = nu(w) is Re Z(v) Im Z(w) - Re Z(w) Im Z(v) = 0. Dividing by alpha > 0 gives

    (D x / 2) (alpha^2 + beta^2) + D y beta + z = 0

with (x, y, z) = (r_v c_w - r_w c_v,  d_v r_w - d_w r_v,  d_w c_v - d_v c_w).
For x != 0 this is a circle centred on the beta-axis; for x == 0 a vertical line.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .kclass import KClass, is_integral, twist_B
from .lattice import DivisorClass, Q, SurfaceData, intersect
from .tilt import charge_parts, discriminant, vertical_beta

VERTICAL = "vertical"
SEMICIRCLE = "semicircle"
EVERYWHERE = "everywhere"
EMPTY = "empty"


class WallVerificationError(RuntimeError):
    """The locus test and the from-scratch slope comparison disagree."""


@dataclass(frozen=True)
class Wall:
    kind: str
    beta: Optional[Fraction] = None
    center: Optional[Fraction] = None
    radius_sq: Optional[Fraction] = None
    witness: Optional[KClass] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.kind == SEMICIRCLE:
            if self.center is None or self.radius_sq is None or self.radius_sq <= 0:
                raise ValueError("a semicircle needs a center and a positive radius_sq")
        elif self.kind == VERTICAL:
            if self.beta is None or self.center is not None or self.radius_sq is not None:
                raise ValueError("a vertical wall carries beta only")
        elif self.kind not in (EVERYWHERE, EMPTY):
            raise ValueError(f"unknown wall kind {self.kind!r}")

    def locus_key(self) -> tuple:
        if self.kind == SEMICIRCLE:
            return (self.kind, self.center, self.radius_sq)
        if self.kind == VERTICAL:
            return (self.kind, self.beta, Fraction(0))
        return (self.kind, Fraction(0), Fraction(0))

    def radius_float(self) -> float:
        return math.sqrt(self.radius_sq)


@dataclass(frozen=True)
class Region:
    beta_min: Fraction
    beta_max: Fraction
    alpha_max: Fraction

    def __init__(self, beta_min, beta_max, alpha_max) -> None:
        object.__setattr__(self, "beta_min", Q(beta_min))
        object.__setattr__(self, "beta_max", Q(beta_max))
        object.__setattr__(self, "alpha_max", Q(alpha_max))


@dataclass(frozen=True)
class Bounds:
    max_rank: int
    max_c: int


def _rcd(a: KClass, B: DivisorClass, s: SurfaceData) -> tuple[Fraction, Fraction, Fraction]:
    t = twist_B(a, B, s)
    return t.ch0, intersect(s.H, t.ch1, s), t.ch2


def wall_coefficients(v: KClass, w: KClass, B: DivisorClass, s: SurfaceData):
    rv, cv, dv = _rcd(v, B, s)
    rw, cw, dw = _rcd(w, B, s)
    return rv * cw - rw * cv, dv * rw - dw * rv, dw * cv - dv * cw


def numerical_wall(v: KClass, w: KClass, B: DivisorClass, s: SurfaceData) -> Wall:
    x, y, z = wall_coefficients(v, w, B, s)
    D = s.degree
    if x == 0:
        if y == 0:
            return Wall(EVERYWHERE if z == 0 else EMPTY, witness=w)
        return Wall(VERTICAL, beta=-z / (D * y), witness=w)
    center = -y / x
    radius_sq = center * center - 2 * z / (D * x)
    if radius_sq <= 0:
        return Wall(EMPTY, witness=w)
    return Wall(SEMICIRCLE, center=center, radius_sq=radius_sq, witness=w)


def _slope_cross(v, w, alpha_sq, beta, B, s) -> Fraction:
    """(Re Z(v) Im Z(w) - Re Z(w) Im Z(v)) / alpha, evaluated from the charges."""
    re_v, im_v = charge_parts(v, alpha_sq, beta, B, s)
    re_w, im_w = charge_parts(w, alpha_sq, beta, B, s)
    return re_v * im_w - re_w * im_v


def on_locus(wall: Wall, alpha_sq: Fraction, beta: Fraction) -> bool:
    if wall.kind == EVERYWHERE:
        return True
    if wall.kind == EMPTY:
        return False
    if wall.kind == VERTICAL:
        return beta == wall.beta
    return (beta - wall.center) ** 2 + alpha_sq == wall.radius_sq


def wall_contains(
    wall: Wall,
    alpha,
    beta,
    v: KClass,
    w: KClass,
    B: DivisorClass,
    s: SurfaceData,
    *,
    alpha_sq=None,
) -> bool:
    """Exact membership of (alpha, beta) in the wall, re-checked against nu(v) = nu(w).

    ``alpha`` may be None when ``alpha_sq`` is given (points with irrational alpha).
    """
    if alpha is not None:
        alpha = Q(alpha)
        if alpha <= 0:
            raise ValueError(f"alpha must be positive, got {alpha}")
        asq = alpha * alpha
        if alpha_sq is not None and Q(alpha_sq) != asq:
            raise ValueError("alpha and alpha_sq disagree")
    else:
        if alpha_sq is None:
            raise ValueError("need alpha or alpha_sq")
        asq = Q(alpha_sq)
        if asq <= 0:
            raise ValueError(f"alpha^2 must be positive, got {asq}")
    beta = Q(beta)
    member = on_locus(wall, asq, beta)
    equal_slopes = _slope_cross(v, w, asq, beta, B, s) == 0
    if member != equal_slopes:
        raise WallVerificationError(
            f"wall {wall.locus_key()} at (alpha^2={asq}, beta={beta}): "
            f"locus says {member}, slope comparison says {equal_slopes}"
        )
    return member


def sample_points(wall: Wall, n: int = 3) -> list[tuple[Fraction, Fraction]]:
    """Points (alpha^2, beta) on the wall with alpha^2 rational and positive."""
    if wall.kind == VERTICAL:
        return [(Fraction(k * k), wall.beta) for k in range(1, n + 1)]
    if wall.kind != SEMICIRCLE:
        raise ValueError(f"cannot sample a wall of kind {wall.kind}")
    rho = wall.radius_sq
    # delta^2 < rho for every rho > 0
    delta = rho / (rho + 1)
    pts = []
    for k in range(n):
        off = delta * Fraction(k, max(n - 1, 1)) * (1 if k % 2 else -1)
        pts.append((rho - off * off, wall.center + off))
    return pts


def _lt_sqrt(x: Fraction, rsq: Fraction) -> bool:
    """x < sqrt(rsq) for rsq >= 0."""
    return x < 0 or x * x < rsq


def _ge_sqrt(x: Fraction, rsq: Fraction) -> bool:
    """x >= sqrt(rsq) for rsq >= 0."""
    return x >= 0 and x * x >= rsq


def intersects_region(wall: Wall, region: Region) -> bool:
    lo, hi, amax = region.beta_min, region.beta_max, region.alpha_max
    if amax <= 0:
        return False
    if wall.kind == VERTICAL:
        return lo <= wall.beta <= hi
    if wall.kind != SEMICIRCLE:
        return False
    c, rsq = wall.center, wall.radius_sq
    # points with 0 < alpha <= amax: beta in (c-R, c-S] u [c+S, c+R), S^2 = R^2 - amax^2
    ssq = rsq - amax * amax
    if ssq <= 0:
        return _lt_sqrt(c - hi, rsq) and _lt_sqrt(lo - c, rsq)
    left = _lt_sqrt(c - hi, rsq) and _ge_sqrt(c - lo, ssq)
    right = _ge_sqrt(hi - c, ssq) and _lt_sqrt(lo - c, rsq)
    return left or right


def _candidate_witnesses(v: KClass, B: DivisorClass, s: SurfaceData, bounds: Bounds):
    D = s.degree
    hb = intersect(s.H, B, s)
    box = bounds.max_c + bounds.max_rank * math.ceil(abs(hb))
    rv = v.ch0
    hcv = intersect(s.H, v.ch1, s)
    ch2v = v.ch2
    cap = Fraction(bounds.max_c * bounds.max_c, 2) + abs(twist_B(v, B, s).ch2)
    bb = intersect(B, B, s)
    for r in range(-bounds.max_rank, bounds.max_rank + 1):
        for coords in itertools.product(range(-box, box + 1), repeat=s.rank):
            ch1 = DivisorClass(coords)
            hc = intersect(s.H, ch1, s)
            if abs(hc - r * hb) > bounds.max_c:
                continue
            lo: Optional[Fraction] = None
            hi: Optional[Fraction] = None

            def tighten(lower=None, upper=None):
                nonlocal lo, hi
                if lower is not None:
                    lo = lower if lo is None else max(lo, lower)
                if upper is not None:
                    hi = upper if hi is None else min(hi, upper)

            if r > 0:
                tighten(upper=hc * hc / (2 * D * r))
            elif r < 0:
                tighten(lower=hc * hc / (2 * D * r))
            rq = rv - r
            hq = hcv - hc
            if rq > 0:
                tighten(lower=ch2v - hq * hq / (2 * D * rq))
            elif rq < 0:
                tighten(upper=ch2v - hq * hq / (2 * D * rq))
            shift = intersect(B, ch1, s) - bb / 2 * r
            tighten(lower=shift - cap, upper=shift + cap)
            if lo > hi:
                continue
            half_sq = intersect(ch1, ch1, s) / 2
            # ch2 = ch1^2/2 - c2 with c2 integral
            for c2 in range(math.ceil(half_sq - hi), math.floor(half_sq - lo) + 1):
                yield KClass(r, ch1, half_sq - c2)


def enumerate_candidate_walls(
    v: KClass,
    B: DivisorClass,
    s: SurfaceData,
    region: Region,
    bounds: Bounds,
) -> list[Wall]:
    """All walls of v induced by integral classes within ``bounds`` that meet ``region``.

    Ranks satisfy |ch0| <= max_rank, |H.ch1^B| <= max_c, both w and v - w pass the
    discriminant test, and |ch2^B(w)| <= max_c^2/2 + |ch2^B(v)| keeps the search finite
    when a rank vanishes or is negative. Walls are merged by locus keeping the
    lexicographically smallest witness.
    """
    if bounds.max_rank < 1 or bounds.max_c < 1:
        raise ValueError(f"bounds must be positive, got {bounds}")
    if region.beta_min > region.beta_max or region.alpha_max < 0:
        raise ValueError(f"empty region {region}")
    if region.alpha_max == 0:
        return []
    best: dict[tuple, Wall] = {}
    for w in _candidate_witnesses(v, B, s, bounds):
        if not is_integral(w, s):
            continue
        if discriminant(w, s) < 0 or discriminant(v - w, s) < 0:
            continue
        wall = numerical_wall(v, w, B, s)
        if wall.kind not in (VERTICAL, SEMICIRCLE):
            continue
        if not intersects_region(wall, region):
            continue
        key = wall.locus_key()
        prev = best.get(key)
        if prev is None or w.sort_key() < prev.witness.sort_key():
            best[key] = wall
    return [best[k] for k in sorted(best)]


def _crossing(a: Wall, b: Wall) -> bool:
    """Do two walls meet at a point with alpha > 0?"""
    if a.kind == VERTICAL and b.kind == VERTICAL:
        return False
    if a.kind == VERTICAL or b.kind == VERTICAL:
        line, circ = (a, b) if a.kind == VERTICAL else (b, a)
        return (line.beta - circ.center) ** 2 < circ.radius_sq
    if a.locus_key() == b.locus_key():
        return False
    c1, p1, c2, p2 = a.center, a.radius_sq, b.center, b.radius_sq
    if c1 == c2:
        return False
    beta = (p1 - p2 - c1 * c1 + c2 * c2) / (2 * (c2 - c1))
    return p1 - (beta - c1) ** 2 > 0


def check_nested(
    walls: Iterable[Wall], v: KClass, B: DivisorClass, s: SurfaceData
) -> list[tuple[Wall, Wall]]:
    """Pairs of walls that cross in the upper half-plane; empty when all are disjoint.

    The vertical wall of v is included implicitly.
    """
    ws = [w for w in walls if w.kind in (VERTICAL, SEMICIRCLE)]
    if v.ch0 > 0:
        b0 = vertical_beta(v, B, s)
        if not any(w.kind == VERTICAL and w.beta == b0 for w in ws):
            ws.append(Wall(VERTICAL, beta=b0))
    return [(a, b) for a, b in itertools.combinations(ws, 2) if _crossing(a, b)]
