"""The determinantal class u on the vertical wall and the identities it satisfies.

On the vertical wall of v the stability condition is (Coh^{beta_0}[-1], -Z_{alpha,beta_0}),
so Z(v) is real and negative. Everything below uses that sign convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .kclass import (
    KClass,
    curve_class,
    euler_pairing,
    hyperplane_class,
    k_mul,
    structure_sheaf,
    tensor_line,
    twist_B,
)
from .lattice import DivisorClass, Q, SurfaceData, intersect
from .tilt import StabilityParams, central_charge, vertical_beta


def _need_positive_rank(v: KClass) -> None:
    if v.ch0 <= 0:
        raise ValueError(f"v must have positive rank, got ch0={v.ch0}")


def u_class(v: KClass, s: SurfaceData) -> KClass:
    """u = -chi(v.h^2) h + chi(v.h) h^2, with both chi values from full HRR."""
    _need_positive_rank(v)
    h = hyperplane_class(s)
    h2 = k_mul(h, h, s)
    return -euler_pairing(v, h2, s) * h + euler_pairing(v, h, s) * h2


def chi_with_u(a: KClass, v: KClass, B: DivisorClass, s: SurfaceData) -> Fraction:
    """Closed form deg X * H.(ch0^B(a) ch1^B(v) - ch0^B(v) ch1^B(a)).

    Independent of B; agrees with euler_pairing(a, u_class(v)).
    """
    _need_positive_rank(v)
    ta, tv = twist_B(a, B, s), twist_B(v, B, s)
    return s.degree * intersect(s.H, tv.ch1 * ta.ch0 - ta.ch1 * tv.ch0, s)


def vertical_charge(v: KClass, alpha, B: DivisorClass, s: SurfaceData) -> Fraction:
    """Z(v) = -Z_{alpha,beta_0}(v), a real number."""
    p = StabilityParams(alpha, vertical_beta(v, B, s), B)
    z = central_charge(v, p, s)
    assert z.im == 0
    return -z.re


def wz_multiplier(v: KClass, alpha, B: DivisorClass, s: SurfaceData) -> Fraction:
    """The positive scalar m with w_Z = m u, i.e. -alpha / (rk(v) Z(v) deg X)."""
    alpha = Q(alpha)
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    _need_positive_rank(v)
    zv = vertical_charge(v, alpha, B, s)
    if zv >= 0:
        raise ValueError(
            f"Z(v) = {zv} is not negative at alpha={alpha}; v fails the discriminant bound"
        )
    return -alpha / (v.ch0 * zv * s.degree)


@dataclass(frozen=True)
class VerticalWallData:
    v: KClass
    B: DivisorClass
    beta0: Fraction
    u: KClass
    surface: SurfaceData

    @classmethod
    def build(cls, v: KClass, B: DivisorClass, s: SurfaceData) -> VerticalWallData:
        return cls(v, B, vertical_beta(v, B, s), u_class(v, s), s)

    def Zv_at(self, alpha) -> Fraction:
        return vertical_charge(self.v, alpha, self.B, self.surface)

    def multiplier_at(self, alpha) -> Fraction:
        return wz_multiplier(self.v, alpha, self.B, self.surface)


def proportionality_sides(
    a: KClass, v: KClass, alpha, B: DivisorClass, s: SurfaceData
) -> tuple[Fraction, Fraction]:
    """(Im(-Z(a)/Z(v)), multiplier * chi(a.u)), computed by separate routes."""
    alpha = Q(alpha)
    p = StabilityParams(alpha, vertical_beta(v, B, s), B)
    za = central_charge(a, p, s)
    zv = central_charge(v, p, s)
    # Z = -Z_{alpha,beta0}; Z(v) is real so Im(-Z(a)/Z(v)) = -Im Z_{a,b}(a) / Re Z_{a,b}(v)
    lhs = -za.im / zv.re
    rhs = wz_multiplier(v, alpha, B, s) * chi_with_u(a, v, B, s)
    return lhs, rhs


def proportionality_check(a: KClass, v: KClass, alpha, B: DivisorClass, s: SurfaceData) -> bool:
    lhs, rhs = proportionality_sides(a, v, alpha, B, s)
    return lhs == rhs


def w_class(v: KClass, a: int, s: SurfaceData) -> KClass:
    """w = -chi(v.h.[O_C]) 1 + chi(v.[O_C]) h for C in |aH|."""
    _need_positive_rank(v)
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    h = hyperplane_class(s)
    oc = curve_class(a, s)
    vh = k_mul(v, h, s)
    return -euler_pairing(vh, oc, s) * structure_sheaf(s) + euler_pairing(v, oc, s) * h


def curve_power_sides(v: KClass, a: int, s: SurfaceData) -> tuple[KClass, KClass]:
    w = w_class(v, a, s)
    return w - tensor_line(w, -a, s), (a * a) * u_class(v, s)


def curve_power_identity(v: KClass, a: int, s: SurfaceData) -> bool:
    """w - w(-a) == a^2 u as Chern triples."""
    lhs, rhs = curve_power_sides(v, a, s)
    return lhs == rhs


def descent_weights(
    factors: Iterable[KClass], v: KClass, B: DivisorClass, s: SurfaceData
) -> list[Fraction]:
    """chi(factor . u) for each factor; all zero exactly when the class descends."""
    u = u_class(v, s)
    return [euler_pairing(f, u, s) for f in factors]
