from fractions import Fraction as F

import pytest

from thetablocks.fock import (
    INV_SQRT2,
    NS,
    ONE,
    R,
    SQRT2,
    FockState,
    FockVector,
    QSqrt2,
    SectorError,
    clifford_apply,
    vacuum,
)


class TestQSqrt2:
    def test_ring_ops(self):
        x = QSqrt2(F(1), F(2))
        y = QSqrt2(F(3), F(-1))
        assert x + y == QSqrt2(F(4), F(1))
        assert x * y == QSqrt2(F(3) - 4, F(6) - 1)
        assert SQRT2 * SQRT2 == QSqrt2(F(2))
        assert SQRT2 * INV_SQRT2 == ONE

    def test_division(self):
        x = QSqrt2(F(1), F(1))
        assert x / x == ONE
        assert (ONE / SQRT2) == INV_SQRT2
        with pytest.raises(ZeroDivisionError):
            ONE / QSqrt2()

    def test_str(self):
        assert str(QSqrt2(F(1, 2), F(3, 4))) == "1/2+3/4√2"
        assert str(QSqrt2(F(0), F(-1))) == "-√2"
        assert str(QSqrt2()) == "0"

    def test_zero_detection(self):
        assert not QSqrt2()
        assert QSqrt2(F(0), F(1, 7))


class TestFockState:
    def test_sector_parity(self):
        FockState(NS, ((-1, 1, 1),))
        FockState(R, ((-2, 1, 1), (0, -1, 0)))
        with pytest.raises(SectorError):
            FockState(NS, ((0, -1, 0),))
        with pytest.raises(SectorError):
            FockState(R, ((-1, 1, 1),))

    def test_energy(self):
        s = FockState(NS, ((-3, 0, 0), (-1, 1, 1)))
        assert s.energy2 == 4
        assert not s.is_ground()
        assert FockState(R, ((0, -1, 0),)).is_ground()


class TestCliffordApply:
    def test_creation_on_vacuum(self):
        v = clifford_apply((-1, -1, 0), FockVector.unit(vacuum(NS)))
        assert v == FockVector.unit(FockState(NS, ((-1, -1, 0),)))

    def test_pairing_contraction(self):
        # phi^{1,1}(1/2) against phi_{1,1}(-1/2) ^ w
        w = FockVector.unit(FockState(NS, ((-1, -1, -1), (-1, 2, 0))))
        stacked = clifford_apply((-1, -1, -1), w)
        assert not stacked  # duplicate generator wedges to zero
        v = clifford_apply((-1, -1, -1), FockVector.unit(
            FockState(NS, ((-1, 2, 0),))
        ))
        out = clifford_apply((1, 1, 1), v)
        assert out == FockVector.unit(FockState(NS, ((-1, 2, 0),)))

    def test_zero_mode_scalar(self):
        # sqrt2 * phi^{0,0}(0) acts by (-1)^degree
        for wedge, sign in ((tuple(), 1), (((0, -1, 0),), -1)):
            v = FockVector.unit(FockState(R, wedge))
            out = SQRT2 * clifford_apply((0, 0, 0), v)
            assert out == sign * v

    def test_dual_realization_roles(self):
        # in the dual realization positive zero modes create
        v = clifford_apply((0, 1, 1), FockVector.unit(vacuum(R, dual=True)))
        assert v == FockVector.unit(FockState(R, ((0, 1, 1),), dual=True))
        assert not clifford_apply((0, -1, -1), FockVector.unit(vacuum(R, dual=True)))

    def test_anticommutator_is_pairing(self):
        # {phi^a(m), phi^b(-m)} = delta_{a+b,0} on arbitrary states
        v = FockVector.unit(FockState(NS, ((-1, 1, 1), (-1, 2, -1))))
        a, b = (1, -2, 1), (-1, 2, -1)
        lhs = clifford_apply(a, clifford_apply(b, v)) + clifford_apply(
            b, clifford_apply(a, v)
        )
        assert lhs == v  # pairing 1
        a2 = (1, 0, 1)
        lhs2 = clifford_apply(a2, clifford_apply(b, v)) + clifford_apply(
            b, clifford_apply(a2, v)
        )
        assert not lhs2  # pairing 0

    def test_vector_arithmetic(self):
        s1 = FockVector.unit(FockState(NS, ((-1, 1, 1),)), F(1, 2))
        s2 = FockVector.unit(FockState(NS, ((-1, 1, 1),)), F(-1, 2))
        assert not (s1 + s2)
        assert (2 * s1).coefficient(FockState(NS, ((-1, 1, 1),))) == ONE
