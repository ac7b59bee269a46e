"""Restriction to a smooth curve C in |aH|: genus, K(C) classes and Riemann-Roch on C."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .kclass import KClass, hyperplane_class
from .lattice import Q, SurfaceData, intersect
from .vertical import w_class


class NonIntegralDegree(ValueError):
    """No integral degree solves the vanishing equation for this rank."""


@dataclass(frozen=True)
class CurveKClass:
    """A class in K(C) recorded by (rank, degree of the determinant)."""

    rank: Fraction
    degree: Fraction

    def __init__(self, rank, degree) -> None:
        object.__setattr__(self, "rank", Q(rank))
        object.__setattr__(self, "degree", Q(degree))

    def __add__(self, other: CurveKClass) -> CurveKClass:
        return CurveKClass(self.rank + other.rank, self.degree + other.degree)

    def __sub__(self, other: CurveKClass) -> CurveKClass:
        return CurveKClass(self.rank - other.rank, self.degree - other.degree)

    def __neg__(self) -> CurveKClass:
        return CurveKClass(-self.rank, -self.degree)

    def __mul__(self, k) -> CurveKClass:
        k = Q(k)
        return CurveKClass(k * self.rank, k * self.degree)

    __rmul__ = __mul__

    def tensor(self, other: CurveKClass) -> CurveKClass:
        return CurveKClass(
            self.rank * other.rank, self.rank * other.degree + other.rank * self.degree
        )

    def as_list(self) -> list[Fraction]:
        return [self.rank, self.degree]


ONE = CurveKClass(1, 0)


def curve_genus(a: int, s: SurfaceData) -> int:
    """Adjunction: 2g - 2 = aH.(aH + K)."""
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    aH = s.H * a
    two_g_minus_2 = intersect(aH, aH + s.K, s)
    g = 1 + two_g_minus_2 / 2
    if g.denominator != 1:
        raise ValueError(f"aH.(aH+K) = {two_g_minus_2} is odd; surface data inconsistent")
    if g < 0:
        raise ValueError(f"negative genus {g} for a={a}; surface data inconsistent")
    return int(g)


@dataclass(frozen=True)
class CurveContext:
    a: int
    genus: int
    hdeg: int

    @classmethod
    def of(cls, a: int, s: SurfaceData) -> CurveContext:
        hdeg = a * s.degree
        if hdeg <= 0 or hdeg.denominator != 1:
            raise ValueError(f"h|_C must have positive integral degree, got {hdeg}")
        return cls(a, curve_genus(a, s), int(hdeg))


def restrict_class(x: KClass, a: int, s: SurfaceData) -> CurveKClass:
    """x|_C = (ch0(x), ch1(x).aH)."""
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    return CurveKClass(x.ch0, intersect(x.ch1, s.H * a, s))


def curve_chi(E: CurveKClass, F: CurveKClass, g: int) -> Fraction:
    """chi(C, E (x) F) = rk E deg F + (deg E + rk E (1 - g)) rk F."""
    return E.rank * F.degree + (E.degree + E.rank * (1 - g)) * F.rank


def flenner_min_degree(r: int, s: SurfaceData) -> int:
    """Least a >= 1 with (a + 1)/2 > deg X * max((r^2 - 1)/4, 1)."""
    if r < 1:
        raise ValueError(f"rank must be >= 1, got {r}")
    bound = s.degree * max(Fraction(r * r - 1, 4), Fraction(1))
    # (a+1)/2 > bound  <=>  a > 2*bound - 1
    t = 2 * bound - 1
    a = t.numerator // t.denominator + 1
    return max(a, 1)


def seshadri_degree(F: CurveKClass, r: int, g: int) -> int:
    """The d with r deg F + (d + r(1 - g)) rk F = 0."""
    if F.rank <= 0:
        raise ValueError(f"F must have positive rank, got {F.rank}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    d = -Fraction(r) * F.degree / F.rank - r * (1 - g)
    if d.denominator != 1:
        raise NonIntegralDegree(f"r={r}: solution d={d} is not an integer")
    return int(d)


def least_seshadri_rank(F: CurveKClass, g: int, r0: int = 1, limit: int = 10_000) -> tuple[int, int]:
    """Smallest r >= r0 admitting an integral degree, with that degree."""
    for r in range(max(r0, 1), max(r0, 1) + limit):
        try:
            return r, seshadri_degree(F, r, g)
        except NonIntegralDegree:
            continue
    raise NonIntegralDegree(f"no integral solution for r in [{r0}, {r0 + limit})")


def complement_class(v: KClass, a: int, m: int, s: SurfaceData) -> CurveKClass:
    """-m w|_C = m (chi(v|_C . h|_C) 1 - chi(v|_C) h|_C), computed on the curve."""
    if v.ch0 <= 0:
        raise ValueError(f"v must have positive rank, got ch0={v.ch0}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    g = curve_genus(a, s)
    vC = restrict_class(v, a, s)
    hC = restrict_class(hyperplane_class(s), a, s)
    neg_w = curve_chi(vC, hC, g) * ONE - curve_chi(vC, ONE, g) * hC
    return m * neg_w


def complement_class_from_surface(v: KClass, a: int, m: int, s: SurfaceData) -> CurveKClass:
    """Same class as :func:`complement_class`, obtained by restricting w from the surface."""
    return -m * restrict_class(w_class(v, a, s), a, s)
