"""Slope functions and central charges of the tilt stability conditions sigma_{alpha,beta}."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .kclass import KClass, twist_B
from .lattice import DivisorClass, Q, SurfaceData, intersect

INF = math.inf


@dataclass(frozen=True)
class StabilityParams:
    alpha: Fraction
    beta: Fraction
    B: DivisorClass

    def __init__(self, alpha, beta, B) -> None:
        alpha = Q(alpha)
        if alpha <= 0:
            raise ValueError(f"alpha must be positive, got {alpha}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", Q(beta))
        object.__setattr__(self, "B", B if isinstance(B, DivisorClass) else DivisorClass(B))


@dataclass(frozen=True)
class CentralChargeValue:
    re: Fraction
    im: Fraction


class LocusKind(str, Enum):
    POSITIVE = "positive"
    ZERO = "zero"
    NEGATIVE = "negative"


def _hc(a: KClass, s: SurfaceData) -> Fraction:
    return intersect(s.H, a.ch1, s)


def mu_B(a: KClass, B: DivisorClass, s: SurfaceData) -> Fraction | float:
    """H.ch1^B / (H^2 ch0^B); +inf for rank zero."""
    if a.ch0 == 0:
        return INF
    t = twist_B(a, B, s)
    return _hc(t, s) / (s.degree * t.ch0)


def charge_parts(
    a: KClass, alpha_sq: Fraction, beta: Fraction, B: DivisorClass, s: SurfaceData
) -> tuple[Fraction, Fraction]:
    """(Re Z, Im Z / alpha) as functions of alpha^2 and beta.

    Useful on loci where alpha itself is irrational but alpha^2 is rational.
    """
    t = twist_B(a, B, s)
    D = s.degree
    hc = _hc(t, s)
    re = (alpha_sq - beta * beta) / 2 * D * t.ch0 + beta * hc - t.ch2
    im_over_alpha = hc - beta * D * t.ch0
    return re, im_over_alpha


def central_charge(a: KClass, p: StabilityParams, s: SurfaceData) -> CentralChargeValue:
    re, im1 = charge_parts(a, p.alpha * p.alpha, p.beta, p.B, s)
    return CentralChargeValue(re, p.alpha * im1)


def tilt_slope(a: KClass, p: StabilityParams, s: SurfaceData) -> Fraction | float:
    """nu = -Re Z / Im Z, +inf where Im Z vanishes."""
    z = central_charge(a, p, s)
    if z.im == 0:
        return INF
    return -z.re / z.im


def vertical_beta(v: KClass, B: DivisorClass, s: SurfaceData) -> Fraction:
    """beta_0 = H.ch1^B(v) / (H^2 ch0(v)), the unique vertical wall of v."""
    if v.ch0 <= 0:
        raise ValueError(f"vertical wall needs positive rank, got ch0={v.ch0}")
    return mu_B(v, B, s)


def discriminant(a: KClass, s: SurfaceData) -> Fraction:
    """(H.ch1)^2 - 2 H^2 ch0 ch2, used as the support-property form."""
    return _hc(a, s) ** 2 - 2 * s.degree * a.ch0 * a.ch2


def vertical_locus_kind(a: KClass, p: StabilityParams, s: SurfaceData) -> LocusKind:
    im = central_charge(a, p, s).im
    if im > 0:
        return LocusKind.POSITIVE
    if im < 0:
        return LocusKind.NEGATIVE
    return LocusKind.ZERO
