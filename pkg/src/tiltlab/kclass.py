"""Numerical K-theory classes on a surface, stored as truncated Chern characters."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable

from .lattice import DivisorClass, Q, SurfaceData, intersect


@dataclass(frozen=True)
class KClass:
    ch0: Fraction
    ch1: DivisorClass
    ch2: Fraction

    def __init__(self, ch0, ch1, ch2) -> None:
        object.__setattr__(self, "ch0", Q(ch0))
        object.__setattr__(self, "ch1", ch1 if isinstance(ch1, DivisorClass) else DivisorClass(ch1))
        object.__setattr__(self, "ch2", Q(ch2))

    @classmethod
    def zero(cls, rank: int) -> KClass:
        return cls(0, DivisorClass.zero(rank), 0)

    def __add__(self, other: KClass) -> KClass:
        return KClass(self.ch0 + other.ch0, self.ch1 + other.ch1, self.ch2 + other.ch2)

    def __sub__(self, other: KClass) -> KClass:
        return KClass(self.ch0 - other.ch0, self.ch1 - other.ch1, self.ch2 - other.ch2)

    def __neg__(self) -> KClass:
        return KClass(-self.ch0, -self.ch1, -self.ch2)

    def __mul__(self, k) -> KClass:
        k = Q(k)
        return KClass(k * self.ch0, self.ch1 * k, k * self.ch2)

    __rmul__ = __mul__

    def sort_key(self) -> tuple:
        return (self.ch0, self.ch1.coords, self.ch2)

    def __str__(self) -> str:
        c1 = ",".join(str(c) for c in self.ch1.coords)
        return f"({self.ch0}, [{c1}], {self.ch2})"


@dataclass(frozen=True)
class ToddClass:
    t0: Fraction
    t1: DivisorClass
    t2: Fraction

    @classmethod
    def of(cls, s: SurfaceData) -> ToddClass:
        return cls(Fraction(1), s.K * Fraction(-1, 2), Fraction(s.chiO))


def _check(a: KClass, s: SurfaceData) -> None:
    if len(a.ch1) != s.rank:
        raise ValueError(f"class lives on Picard rank {len(a.ch1)}, surface has rank {s.rank}")


def second_chern(a: KClass, s: SurfaceData) -> Fraction:
    """c2 = c1^2/2 - ch2."""
    _check(a, s)
    return intersect(a.ch1, a.ch1, s) / 2 - a.ch2


def is_integral(a: KClass, s: SurfaceData) -> bool:
    """True when ch0, c1 and c2 are all integers.

    This implies ch2 in 1/2 Z and ch1^2 - 2 ch0 ch2 in Z.
    """
    if a.ch0.denominator != 1 or not a.ch1.is_integral():
        return False
    return second_chern(a, s).denominator == 1


# -- named constructors -----------------------------------------------------

def structure_sheaf(s: SurfaceData) -> KClass:
    return KClass(1, s.zero_divisor(), 0)


def point_class(s: SurfaceData) -> KClass:
    """[O_p] = (0, 0, 1)."""
    return KClass(0, s.zero_divisor(), 1)


def hyperplane_class(s: SurfaceData) -> KClass:
    """h = [O_H], with ch(O_H) = H - H^2/2."""
    return KClass(0, s.H, -s.degree / 2)


def line_bundle(n: int, s: SurfaceData) -> KClass:
    """ch(O_X(nH)) = (1, nH, n^2 H^2 / 2)."""
    return KClass(1, s.H * n, Fraction(n * n) * s.degree / 2)


def curve_class(a: int, s: SurfaceData) -> KClass:
    """[O_C] for C in |aH|, i.e. a*h - binom(a,2)*h^2."""
    h = hyperplane_class(s)
    return a * h - comb(a, 2) * k_mul(h, h, s)


def from_chern(rank: int, c1: Iterable, c2: int, s: SurfaceData) -> KClass:
    """Integral class with the given rank and Chern classes."""
    d = s.divisor(c1)
    return KClass(rank, d, intersect(d, d, s) / 2 - Q(c2))


# -- ring structure ---------------------------------------------------------

def k_mul(a: KClass, b: KClass, s: SurfaceData) -> KClass:
    _check(a, s)
    _check(b, s)
    return KClass(
        a.ch0 * b.ch0,
        b.ch1 * a.ch0 + a.ch1 * b.ch0,
        a.ch0 * b.ch2 + b.ch0 * a.ch2 + intersect(a.ch1, b.ch1, s),
    )


def k_pow(a: KClass, n: int, s: SurfaceData) -> KClass:
    if n < 0:
        raise ValueError("negative powers are not defined for arbitrary classes")
    out = structure_sheaf(s)
    for _ in range(n):
        out = k_mul(out, a, s)
    return out


def twist_B(a: KClass, B: DivisorClass, s: SurfaceData) -> KClass:
    """ch^B = e^{-B} ch."""
    _check(a, s)
    return KClass(
        a.ch0,
        a.ch1 - B * a.ch0,
        a.ch2 - intersect(B, a.ch1, s) + intersect(B, B, s) / 2 * a.ch0,
    )


def tensor_line(a: KClass, n: int, s: SurfaceData) -> KClass:
    """a(n) = a . [O_X(nH)]."""
    return k_mul(a, line_bundle(n, s), s)


def euler_pairing(a: KClass, b: KClass, s: SurfaceData) -> Fraction:
    """chi(a . b) by Hirzebruch-Riemann-Roch against td_X = 1 - K/2 + chi(O_X)[p]."""
    p = k_mul(a, b, s)
    td = ToddClass.of(s)
    return p.ch2 + intersect(p.ch1, td.t1, s) + p.ch0 * td.t2


def chi(a: KClass, s: SurfaceData) -> Fraction:
    return euler_pairing(a, structure_sheaf(s), s)


def random_integral_class(
    rng: random.Random,
    s: SurfaceData,
    *,
    rank_range: tuple[int, int] = (-4, 4),
    c1_bound: int = 4,
    c2_bound: int = 6,
) -> KClass:
    r = rng.randint(*rank_range)
    c1 = [rng.randint(-c1_bound, c1_bound) for _ in range(s.rank)]
    c2 = rng.randint(-c2_bound, c2_bound)
    return from_chern(r, c1, c2, s)
