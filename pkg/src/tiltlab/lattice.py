"""Numerical data of a polarized surface and its intersection form.

Everything here is exact: coordinates are :class:`fractions.Fraction` and the
Gram matrix is integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def Q(x) -> Fraction:
    """Coerce an int, str ("p/q") or Fraction to a Fraction; floats are refused."""
    if isinstance(x, float):
        raise TypeError(f"refusing float {x!r}; pass an exact rational")
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    return Fraction(x)


@dataclass(frozen=True)
class DivisorClass:
    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable) -> None:
        object.__setattr__(self, "coords", tuple(Q(c) for c in coords))

    @classmethod
    def zero(cls, rank: int) -> DivisorClass:
        return cls((0,) * rank)

    def __len__(self) -> int:
        return len(self.coords)

    def _check(self, other: DivisorClass) -> None:
        if len(self.coords) != len(other.coords):
            raise ValueError(
                f"divisor dimension mismatch: {len(self.coords)} vs {len(other.coords)}"
            )

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-a for a in self.coords)

    def __mul__(self, k) -> DivisorClass:
        k = Q(k)
        return DivisorClass(k * a for a in self.coords)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)


@dataclass(frozen=True)
class SurfaceData:
    """Picard rank, intersection form, polarization H, canonical class K and chi(O_X).

    Construction does not validate; call :func:`validate_surface` for that.
    """

    rank: int
    gram: tuple[tuple[int, ...], ...]
    H: DivisorClass
    K: DivisorClass
    chiO: int

    def __init__(self, rank: int, gram: Sequence[Sequence[int]], H, K, chiO: int) -> None:
        object.__setattr__(self, "rank", int(rank))
        object.__setattr__(self, "gram", tuple(tuple(int(x) for x in row) for row in gram))
        object.__setattr__(self, "H", H if isinstance(H, DivisorClass) else DivisorClass(H))
        object.__setattr__(self, "K", K if isinstance(K, DivisorClass) else DivisorClass(K))
        object.__setattr__(self, "chiO", int(chiO))

    @property
    def degree(self) -> Fraction:
        """deg X = H^2."""
        return intersect(self.H, self.H, self)

    def divisor(self, coords: Iterable) -> DivisorClass:
        d = DivisorClass(coords)
        if len(d) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(d)}")
        return d

    def zero_divisor(self) -> DivisorClass:
        return DivisorClass.zero(self.rank)

    def basis(self) -> list[DivisorClass]:
        return [
            DivisorClass(1 if j == i else 0 for j in range(self.rank))
            for i in range(self.rank)
        ]


def intersect(d1: DivisorClass, d2: DivisorClass, s: SurfaceData) -> Fraction:
    """The intersection number d1 . d2 computed from the Gram matrix."""
    if len(d1) != s.rank or len(d2) != s.rank:
        raise ValueError(
            f"dimension mismatch: got {len(d1)} and {len(d2)} coords for Picard rank {s.rank}"
        )
    total = Fraction(0)
    for i, x in enumerate(d1.coords):
        if x == 0:
            continue
        row = s.gram[i]
        total += x * sum((row[j] * y for j, y in enumerate(d2.coords)), Fraction(0))
    return total


def validate_surface(s: SurfaceData) -> list[str]:
    """Return the list of violated invariants (empty when the data is consistent)."""
    problems: list[str] = []
    if s.rank < 1:
        problems.append(f"Picard rank must be positive, got {s.rank}")
        return problems
    if len(s.gram) != s.rank or any(len(row) != s.rank for row in s.gram):
        problems.append(f"gram must be {s.rank}x{s.rank}, got {[len(r) for r in s.gram]}")
        return problems
    for i in range(s.rank):
        for j in range(i + 1, s.rank):
            if s.gram[i][j] != s.gram[j][i]:
                problems.append(
                    f"gram not symmetric: gram[{i}][{j}]={s.gram[i][j]} != gram[{j}][{i}]={s.gram[j][i]}"
                )
    for name, d in (("H", s.H), ("K", s.K)):
        if len(d) != s.rank:
            problems.append(f"{name} has {len(d)} coords, expected {s.rank}")
        elif not d.is_integral():
            problems.append(f"{name} must have integer coords, got {[str(c) for c in d.coords]}")
    if any(p.startswith(("H has", "K has")) for p in problems):
        return problems
    hh = intersect(s.H, s.H, s)
    if hh <= 0:
        problems.append(f"H^2>0 fails: H.H = {hh}")
    for i, D in enumerate(s.basis()):
        val = intersect(D, D, s) + intersect(D, s.K, s)
        if val.denominator != 1 or val.numerator % 2 != 0:
            problems.append(f"parity fails for basis divisor {i}: D.D + D.K = {val} is odd")
    return problems


# desk-scale reference surfaces: the projective plane and P1 x P1 with H = (1,1)
S1 = SurfaceData(rank=1, gram=[[1]], H=[1], K=[-3], chiO=1)
S2 = SurfaceData(rank=2, gram=[[0, 1], [1, 0]], H=[1, 1], K=[-2, -2], chiO=1)

FIXTURES = {"S1": S1, "S2": S2}
