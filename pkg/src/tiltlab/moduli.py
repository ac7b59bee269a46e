"""Symbolic moduli points on the vertical wall.

Bundles are opaque isomorphism tokens carrying a K-class; skyscrapers are point
tokens. A :class:`MockSheaf` stands for a mu-polystable torsion-free sheaf F via its
double dual and the lengths of F^vv/F; :func:`sigma_graded` sends it to the
sigma-polystable object F^vv + sum_p O_p^{l_p}[-1].
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .kclass import KClass, point_class
from .lattice import DivisorClass, SurfaceData
from .tilt import discriminant, mu_B, vertical_beta

BUNDLE = "bundle"
SKYSCRAPER = "skyscraper"


@dataclass(frozen=True)
class StableFactor:
    kind: str
    iso_id: Optional[str] = None
    cls: Optional[KClass] = None
    point_id: Optional[str] = None

    def __post_init__(self) -> None:
        if self.kind == BUNDLE:
            if self.iso_id is None or self.cls is None or self.point_id is not None:
                raise ValueError("bundle factor needs iso_id and cls only")
        elif self.kind == SKYSCRAPER:
            if self.point_id is None or self.iso_id is not None or self.cls is not None:
                raise ValueError("skyscraper factor needs point_id only")
        else:
            raise ValueError(f"unknown factor kind {self.kind!r}")

    @classmethod
    def bundle(cls, iso_id: str, k: KClass) -> StableFactor:
        return cls(BUNDLE, iso_id=iso_id, cls=k)

    @classmethod
    def skyscraper(cls, point_id: str) -> StableFactor:
        return cls(SKYSCRAPER, point_id=point_id)

    def key(self) -> tuple[str, str]:
        return (self.kind, self.iso_id if self.kind == BUNDLE else self.point_id)


@dataclass(frozen=True)
class PolystableObject:
    factors: tuple[StableFactor, ...]

    def __init__(self, factors: Iterable[StableFactor]) -> None:
        object.__setattr__(self, "factors", tuple(factors))

    def multiset(self) -> Counter:
        return Counter(f.key() for f in self.factors)


@dataclass(frozen=True)
class MockSheaf:
    double_dual: tuple[StableFactor, ...]
    torsion_lengths: Mapping[str, int] = field(default_factory=dict)

    def __init__(self, double_dual: Iterable[StableFactor], torsion_lengths: Mapping[str, int] | None = None):
        dd = tuple(double_dual)
        if any(f.kind != BUNDLE for f in dd):
            raise ValueError("double dual consists of bundle factors only")
        lengths = dict(torsion_lengths or {})
        for p, n in lengths.items():
            if not isinstance(n, int) or n <= 0:
                raise ValueError(f"torsion length at {p!r} must be a positive integer, got {n!r}")
        object.__setattr__(self, "double_dual", dd)
        object.__setattr__(self, "torsion_lengths", dict(sorted(lengths.items())))

    def __hash__(self) -> int:
        return hash((self.double_dual, tuple(self.torsion_lengths.items())))


def sigma_graded(mock: MockSheaf) -> PolystableObject:
    factors = list(mock.double_dual)
    for p, n in mock.torsion_lengths.items():
        factors.extend(StableFactor.skyscraper(p) for _ in range(n))
    return PolystableObject(factors)


def s_equivalent(x: PolystableObject, y: PolystableObject) -> bool:
    return x.multiset() == y.multiset()


def uhlenbeck_equivalent(m1: MockSheaf, m2: MockSheaf) -> bool:
    same_dd = Counter(f.iso_id for f in m1.double_dual) == Counter(f.iso_id for f in m2.double_dual)
    return same_dd and dict(m1.torsion_lengths) == dict(m2.torsion_lengths)


def mock_from_polystable(x: PolystableObject) -> MockSheaf:
    """A mock sheaf whose image under :func:`sigma_graded` is S-equivalent to ``x``.

    Stands in for choosing Artinian quotients of the local rings at each point.
    """
    bundles = [f for f in x.factors if f.kind == BUNDLE]
    lengths = Counter(f.point_id for f in x.factors if f.kind == SKYSCRAPER)
    return MockSheaf(bundles, dict(lengths))


def total_class(x: PolystableObject, s: SurfaceData) -> KClass:
    """Bundles contribute their class, each O_p[-1] contributes -[O_p]."""
    total = KClass.zero(s.rank)
    skyscraper = -point_class(s)
    for f in x.factors:
        total = total + (f.cls if f.kind == BUNDLE else skyscraper)
    return total


def validate_polystable(
    x: PolystableObject, v: KClass, B: DivisorClass, s: SurfaceData
) -> list[str]:
    problems = []
    total = total_class(x, s)
    if total != v:
        problems.append(f"total class {total} != v = {v}")
    b0 = vertical_beta(v, B, s)
    for i, f in enumerate(x.factors):
        if f.kind != BUNDLE:
            continue
        if f.cls.ch0 <= 0:
            problems.append(f"factor {i} ({f.iso_id}) has non-positive rank {f.cls.ch0}")
            continue
        mu = mu_B(f.cls, B, s)
        if mu != b0:
            problems.append(f"factor {i} ({f.iso_id}) has slope {mu} != beta0 = {b0}")
        disc = discriminant(f.cls, s)
        if disc < 0:
            problems.append(f"factor {i} ({f.iso_id}) has negative discriminant {disc}")
    return problems


def random_mock_sheaf(
    rng: random.Random,
    bundle_pool: list[StableFactor],
    points: list[str],
    *,
    max_bundles: int = 3,
    max_length: int = 3,
) -> MockSheaf:
    n = rng.randint(1, max_bundles)
    dd = [rng.choice(bundle_pool) for _ in range(n)]
    lengths: dict[str, int] = {}
    for p in rng.sample(points, rng.randint(0, len(points))):
        lengths[p] = rng.randint(1, max_length)
    return MockSheaf(dd, lengths)
