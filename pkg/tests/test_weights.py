from fractions import Fraction as F
from math import comb

import pytest

from thetablocks.rootsys import Weight
from thetablocks.weights import (
    SO_PAIR,
    SPIN_FIXED,
    SPIN_PAIR,
    LevelError,
    YoungDiagram,
    complement,
    count_sigma_fixed,
    enumerate_level,
    sigma,
    sigma_orbit_class,
    star,
    transpose,
    weight_of_young,
    young_diagrams,
    young_of_weight,
)


class TestEnumerateLevel:
    def test_level_one_any_rank(self):
        for r in (2, 3, 5, 8):
            ws = enumerate_level(r, 1)
            assert len(ws) == 3
            assert set(ws) == {
                Weight.zero(r),
                Weight.fundamental(r, 1),
                Weight.fundamental(r, r),
            }

    def test_r2_level2(self):
        got = {str(w) for w in enumerate_level(2, 2)}
        assert got == {"0,0", "1,0", "1,1", "2,0", "1/2,1/2", "3/2,1/2"}

    def test_exhaustive_matches_inequality(self):
        ws = enumerate_level(3, 4)
        for w in ws:
            assert w.level <= 4
        # brute force count over a bounding box of quarter-integers
        count = 0
        for num0 in range(0, 17):
            for num1 in range(0, num0 + 1):
                for num2 in range(0, num1 + 1):
                    if (num0 % 2) == (num1 % 2) == (num2 % 2) and num0 + num1 <= 8:
                        count += 1
        assert len(ws) == count

    def test_deterministic_order(self):
        assert list(enumerate_level(2, 3)) == sorted(
            enumerate_level(2, 3), key=lambda w: (w.is_spin, w.coords)
        )


class TestSigma:
    def test_vacuum_to_top(self):
        for r, ell in ((2, 1), (3, 5), (4, 7)):
            img = sigma(Weight.zero(r), ell)
            assert img.omega_coords()[0] == ell
            assert img == Weight(tuple([F(ell)] + [F(0)] * (r - 1)))

    def test_involution_and_kind(self):
        for r in (2, 3, 4):
            for ell in range(1, 10):
                for w in enumerate_level(r, ell):
                    img = sigma(w, ell)
                    assert sigma(img, ell) == w
                    assert img.is_so == w.is_so

    def test_fixed_example(self):
        w = Weight.parse("5/2,1/2")
        assert sigma(w, 5) == w

    def test_level_guard(self):
        with pytest.raises(LevelError):
            sigma(Weight.parse("3,0"), 2)


class TestYoungCalculus:
    def test_transpose(self):
        assert transpose(YoungDiagram.parse("[3,1]")) == YoungDiagram.parse("[2,1,1]")
        assert transpose(YoungDiagram.parse("[]")) == YoungDiagram.parse("[]")

    def test_complement(self):
        assert complement(YoungDiagram.parse("[3,1]"), 2, 3) == YoungDiagram.parse("[2]")
        assert complement(YoungDiagram.parse("[]"), 2, 2) == YoungDiagram.parse("[2,2]")

    def test_star(self):
        assert star(YoungDiagram.parse("[3,1]"), 2, 3) == YoungDiagram.parse("[1,1]")

    def test_star_involution(self):
        for r, s in ((2, 2), (2, 3), (3, 2), (3, 3)):
            for y in young_diagrams(r, s):
                assert star(star(y, r, s), s, r) == y

    def test_box_count(self):
        for r in range(1, 7):
            for s in range(1, 7):
                assert len(young_diagrams(r, s)) == comb(r + s, r)

    def test_box_violation(self):
        with pytest.raises(ValueError):
            complement(YoungDiagram.parse("[4]"), 2, 3)

    def test_weight_maps(self):
        y = YoungDiagram.parse("[2,1]")
        w = weight_of_young(y, 3)
        assert w == Weight.parse("2,1,0")
        ws = weight_of_young(y, 3, spin=True)
        assert ws == Weight.parse("5/2,3/2,1/2")
        assert young_of_weight(w) == (y, False)
        assert young_of_weight(ws) == (y, True)

    def test_normalization(self):
        assert YoungDiagram((3, 1, 0, 0)).rows == (3, 1)
        with pytest.raises(ValueError):
            YoungDiagram((1, 2))


class TestLevelWeight:
    def test_kind_and_bound(self):
        from thetablocks.weights import SO, SPIN, LevelWeight

        assert LevelWeight(Weight.parse("1,0"), 3).kind == SO
        assert LevelWeight(Weight.parse("3/2,1/2"), 3).kind == SPIN
        with pytest.raises(LevelError):
            LevelWeight(Weight.parse("3,1"), 3)


class TestSigmaOrbits:
    def test_classes_at_22(self):
        assert sigma_orbit_class(Weight.parse("1,0"), 2, 2) == SO_PAIR
        assert sigma_orbit_class(Weight.parse("1/2,1/2"), 2, 2) == SPIN_PAIR
        assert sigma_orbit_class(Weight.parse("5/2,1/2"), 2, 2) == SPIN_FIXED

    def test_count_fixed(self):
        assert count_sigma_fixed(2, 2) == 3
        for r, s in ((2, 2), (2, 3), (3, 2), (3, 3)):
            ell = 2 * s + 1
            fixed = sum(
                1
                for w in enumerate_level(r, ell)
                if sigma_orbit_class(w, r, s) == SPIN_FIXED
            )
            assert fixed == count_sigma_fixed(r, s)

    def test_so_weights_never_fixed_at_odd_level(self):
        for r, s in ((2, 2), (2, 3), (3, 2)):
            ell = 2 * s + 1
            for w in enumerate_level(r, ell):
                if w.is_so:
                    assert sigma(w, ell) != w

    def test_box_is_fundamental_domain(self):
        # SO weights at level 2s+1 are exactly Y_{r,s} plus its sigma image
        r, s = 2, 2
        ell = 2 * s + 1
        box = {weight_of_young(y, r) for y in young_diagrams(r, s)}
        so = {w for w in enumerate_level(r, ell) if w.is_so}
        assert so == box | {sigma(w, ell) for w in box}
        assert not box & {sigma(w, ell) for w in box}
