import itertools

import mpmath
import pytest

from thetablocks.fusion import FusionTable
from thetablocks.rootsys import Weight
from thetablocks.verlinde import (
    char_sign,
    dim_trig,
    n0_oxbury,
    oxbury_check,
    s_matrix,
    theta_counts,
    twisted_total,
)
from thetablocks.weights import enumerate_level


class TestSMatrix:
    @pytest.mark.parametrize("r,ell", [(2, 2), (2, 4), (3, 2)])
    def test_symmetric_unitary_positive(self, r, ell):
        sm = s_matrix(r, ell)
        n = len(sm.weights)
        with mpmath.workdps(sm.dps):
            tol = mpmath.mpf(10) ** (-sm.dps + 10)
            for i in range(n):
                assert sm.entries[0][i] > 0
                for j in range(n):
                    assert abs(sm.entries[i][j] - sm.entries[j][i]) < tol
                    dot = mpmath.fsum(
                        sm.entries[i][k] * sm.entries[j][k] for k in range(n)
                    )
                    assert abs(dot - (1 if i == j else 0)) < tol

    def test_s_squared_is_identity(self):
        # charge conjugation is trivial for B_r, so S^2 = 1 within tolerance
        sm = s_matrix(2, 3)
        n = len(sm.weights)
        with mpmath.workdps(sm.dps):
            tol = mpmath.mpf(10) ** (-sm.dps + 10)
            for i in range(n):
                for j in range(n):
                    dot = mpmath.fsum(
                        sm.entries[i][k] * sm.entries[k][j] for k in range(n)
                    )
                    assert abs(dot - (1 if i == j else 0)) < tol


class TestDimTrig:
    def test_level_one_genus_forms(self):
        assert dim_trig(2, [Weight.fundamental(2, 1)], 2, 1) == 6
        assert dim_trig(3, [Weight.fundamental(2, 1)], 2, 1) == 28

    def test_torus_vacuum(self):
        assert dim_trig(1, [], 2, 2) == 6
        assert dim_trig(1, [], 3, 2) == len(enumerate_level(3, 2))

    def test_failure_example_via_trig(self):
        lam = Weight.parse("5/2,1/2")
        w1 = Weight.fundamental(2, 1)
        assert dim_trig(0, [lam, lam, w1, w1], 2, 7) == 4


class TestOxbury:
    def test_char_sign(self):
        assert char_sign(Weight.parse("1,0")) == 1
        assert char_sign(Weight.fundamental(2, 2)) == -1
        assert char_sign(Weight.fundamental(4, 4)) == -1

    def test_level_one_totals(self):
        for g in (2, 3):
            for r in (2, 3):
                assert twisted_total(g, r, 1) == 2 ** (2 * g)
                assert 2 * n0_oxbury(g, r, 1) == 2 ** (2 * g)

    def test_n0_value(self):
        assert n0_oxbury(2, 2, 1) == 8

    def test_genus_one_counts_so_weights(self):
        for r, ell in ((2, 3), (2, 5), (3, 3)):
            want = sum(1 for w in enumerate_level(r, ell) if w.is_so)
            assert n0_oxbury(1, r, ell) == want

    def test_twisted_total_identity(self):
        # dim V_{omega_0} + dim V_{ell omega_1} = 2 * n0 at every level
        for g, r, ell in ((2, 2, 3), (2, 3, 2), (3, 2, 2)):
            assert twisted_total(g, r, ell) == 2 * n0_oxbury(g, r, ell)

    @pytest.mark.parametrize("g,r,s", [(2, 2, 2), (2, 2, 3), (3, 2, 2), (3, 2, 3)])
    def test_symmetry(self, g, r, s):
        rep = oxbury_check(g, r, s)
        assert rep.equal, (rep.lhs, rep.rhs)

    def test_vacuum_block_matches_fusion(self):
        # the two independent engines agree on the twisted total at (2,2):
        # dim V_{omega_0} + dim V_{5 omega_1} = 2 * N_2^0(so(5), 5)
        ell = 5
        t = FusionTable(2, ell)
        top = Weight.parse("5,0")
        fusion_sum = t.dim_genus_g(2, []) + t.dim_genus_g(2, [top])
        assert fusion_sum == twisted_total(2, 2, ell) == 2 * n0_oxbury(2, 2, ell)


class TestThetaCounts:
    def test_values(self):
        assert theta_counts(2) == (16, 10, 6)
        assert theta_counts(0) == (1, 1, 0)
        assert theta_counts(3) == (64, 36, 28)

    def test_odd_matches_level_one_dimension(self):
        t = FusionTable(2, 1)
        for g in (2, 3):
            n_g = t.dim_genus_g(g, [Weight.fundamental(2, 1)])
            assert theta_counts(g)[2] == n_g

    def test_partition(self):
        for g in range(6):
            total, even, odd = theta_counts(g)
            assert even + odd == total


class TestDualOracle:
    @pytest.mark.parametrize("r,ell", [(2, 1), (2, 2), (3, 1)])
    def test_small_triple_sets(self, r, ell):
        t = FusionTable(r, ell)
        ws = t.weights()
        for a, b, c in itertools.product(ws, repeat=3):
            assert t.triple(a, b, c) == dim_trig(0, [a, b, c], r, ell), (a, b, c)
