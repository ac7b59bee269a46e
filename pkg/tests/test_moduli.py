import random
from collections import Counter

import pytest

from conftest import K1
from tiltlab.lattice import S1, DivisorClass
from tiltlab.moduli import (
    MockSheaf,
    PolystableObject,
    StableFactor,
    mock_from_polystable,
    random_mock_sheaf,
    s_equivalent,
    sigma_graded,
    total_class,
    uhlenbeck_equivalent,
    validate_polystable,
)

ZERO1 = DivisorClass([0])
V = K1(2, 0, -1)
E = StableFactor.bundle("E", K1(2, 0, 0))
O1 = StableFactor.bundle("O", K1(1, 0, 0))
O2 = StableFactor.bundle("O'", K1(1, 0, 0))
pt = StableFactor.skyscraper


def pool():
    return [O1, O2, E, StableFactor.bundle("E'", K1(2, 0, 0))]


class TestFactors:
    def test_kind_checks(self):
        with pytest.raises(ValueError):
            StableFactor("bundle", iso_id="x")
        with pytest.raises(ValueError):
            StableFactor("skyscraper", point_id="p", iso_id="x")
        with pytest.raises(ValueError):
            StableFactor("torsion", point_id="p")

    def test_mock_rejects(self):
        with pytest.raises(ValueError):
            MockSheaf([pt("p")])
        with pytest.raises(ValueError):
            MockSheaf([E], {"p": 0})


class TestSigmaGraded:
    def test_locally_free(self):
        assert sigma_graded(MockSheaf([E, O1])).factors == (E, O1)

    def test_lengths(self):
        x = sigma_graded(MockSheaf([E], {"p": 2}))
        assert x.multiset() == Counter({("bundle", "E"): 1, ("skyscraper", "p"): 2})
        y = sigma_graded(MockSheaf([E], {"p": 1, "q": 3}))
        skys = Counter(f.point_id for f in y.factors if f.kind == "skyscraper")
        assert skys == Counter({"p": 1, "q": 3})


class TestSEquivalence:
    def test_examples(self):
        x = PolystableObject([E, O1, pt("p")])
        assert s_equivalent(x, x)
        assert s_equivalent(x, PolystableObject([pt("p"), O1, E]))
        assert not s_equivalent(PolystableObject([O1]), PolystableObject([O2]))


class TestUhlenbeck:
    def test_examples(self):
        m = MockSheaf([E], {"p": 2})
        assert uhlenbeck_equivalent(m, MockSheaf([E], {"p": 2}))
        assert not uhlenbeck_equivalent(m, MockSheaf([E], {"p": 1, "q": 1}))
        assert not uhlenbeck_equivalent(MockSheaf([O1, O1]), MockSheaf([O1, O2]))


class TestTotalClass:
    def test_examples(self):
        assert total_class(PolystableObject([StableFactor.bundle("F", V)]), S1) == V
        assert total_class(PolystableObject([E, pt("p")]), S1) == V
        assert total_class(PolystableObject([pt("p"), pt("q"), pt("p")]), S1) == K1(0, 0, -3)

    def test_sigma_graded_subtracts_lengths(self, rng):
        for _ in range(50):
            m = random_mock_sheaf(rng, pool(), ["p", "q", "r"])
            dd = total_class(PolystableObject(m.double_dual), S1)
            n = sum(m.torsion_lengths.values())
            assert total_class(sigma_graded(m), S1) == dd - K1(0, 0, n)


class TestValidate:
    def test_ok(self):
        assert validate_polystable(PolystableObject([E, pt("p")]), V, ZERO1, S1) == []

    def test_slope_mismatch(self):
        bad = StableFactor.bundle("L", K1(1, 1, 0))
        problems = validate_polystable(PolystableObject([bad, StableFactor.bundle("M", K1(1, -1, -1))]), V, ZERO1, S1)
        assert any("slope" in p for p in problems)

    def test_total_mismatch(self):
        problems = validate_polystable(PolystableObject([E]), V, ZERO1, S1)
        assert len(problems) == 1 and "total class" in problems[0]


def _family(seed, n):
    rng = random.Random(seed)
    return [random_mock_sheaf(rng, pool(), ["p", "q"], max_bundles=2, max_length=2) for _ in range(n)]


class TestPhi:
    def test_bijection_on_points(self):
        fam = _family(11, 80)
        for m1 in fam:
            for m2 in fam:
                assert uhlenbeck_equivalent(m1, m2) == s_equivalent(sigma_graded(m1), sigma_graded(m2))

    def test_surjective_witness(self, rng):
        for _ in range(100):
            m = random_mock_sheaf(rng, pool(), ["p", "q", "r"])
            x = sigma_graded(m)
            back = mock_from_polystable(x)
            assert s_equivalent(sigma_graded(back), x)
            assert uhlenbeck_equivalent(back, m)

    @pytest.mark.parametrize("rel", ["uhl", "s"])
    def test_equivalence_relation(self, rel):
        fam = _family(5, 30)
        if rel == "uhl":
            eq = uhlenbeck_equivalent
        else:
            eq = lambda a, b: s_equivalent(sigma_graded(a), sigma_graded(b))
        for a in fam:
            assert eq(a, a)
            for b in fam:
                assert eq(a, b) == eq(b, a)
                if not eq(a, b):
                    continue
                for c in fam:
                    if eq(b, c):
                        assert eq(a, c)
