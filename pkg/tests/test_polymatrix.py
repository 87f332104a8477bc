import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from qcorona.cpoly import CP_ONE, CP_Z, CPoly, cpoly_from_rationals
from qcorona.polymatrix import (
    CertificateMismatch,
    FullRankCertificate,
    MinorBudgetExceeded,
    PolyMatrix,
    RankObstruction,
    det_bareiss,
    det_cofactor,
    minor_gcd_certificate,
    rank_at,
    solve_full_rank,
)
from qcorona.scalars import GaussRat
from qcorona.syzygy import koszul_matrix

from conftest import cpolys

I = GaussRat(0, 1)
Z_MINUS_I = CPoly([-I, 1])
ONE_MINUS_Z = cpoly_from_rationals([1, -1])


def _koszul_of_example():
    # Splits of (q - i, q - j): the vector (z - i, 0, z, -1).
    return koszul_matrix([Z_MINUS_I, CPoly(), CP_Z, CPoly([GaussRat(-1)])])


class TestRankAt:
    def test_koszul_example(self):
        assert rank_at(_koszul_of_example(), GaussRat(0)) == 3

    def test_identity(self):
        m = PolyMatrix.identity(4)
        assert rank_at(m, GaussRat(7, 5)) == 4

    def test_zero_matrix(self):
        m = PolyMatrix(2, 3, [CPoly()] * 6)
        assert rank_at(m, GaussRat(1)) == 0


class TestDeterminants:
    def test_unimodular_2x2(self):
        m = PolyMatrix.from_rows([
            [CP_ONE, CP_Z],
            [CP_Z, cpoly_from_rationals([1, 0, 1])],
        ])
        assert det_bareiss(m) == CP_ONE

    def test_singular(self):
        m = PolyMatrix.from_rows([[CP_Z, CP_Z], [CP_Z, CP_Z]])
        assert det_bareiss(m).is_zero()

    def test_row_swap_sign(self):
        m = PolyMatrix.from_rows([
            [CPoly(), CP_ONE],
            [CP_ONE, CPoly()],
        ])
        assert det_bareiss(m) == CPoly([GaussRat(-1)])

    @pytest.mark.parametrize("size", [3, 4])
    def test_bareiss_matches_cofactor(self, size):
        rng = random.Random(size * 101)
        for _ in range(8):
            entries = [
                CPoly([GaussRat(rng.randint(-2, 2), rng.randint(-2, 2))
                       for _ in range(rng.randint(1, 3))])
                for _ in range(size * size)
            ]
            m = PolyMatrix(size, size, entries)
            assert det_bareiss(m) == det_cofactor(m)

    @settings(max_examples=20)
    @given(st.lists(cpolys(2), min_size=9, max_size=9))
    def test_bareiss_matches_cofactor_hypothesis(self, entries):
        m = PolyMatrix(3, 3, entries)
        assert det_bareiss(m) == det_cofactor(m)


class TestMinorGcdCertificate:
    def test_partition_of_unity_row(self):
        m = PolyMatrix(1, 2, [CP_Z, ONE_MINUS_Z])
        cert = minor_gcd_certificate(m)
        assert isinstance(cert, FullRankCertificate)
        assert cert.minors == (CP_Z, ONE_MINUS_Z)
        assert cert.witnesses == (CP_ONE, CP_ONE)
        assert cert.combination().is_one()
        assert cert.verify(m)

    def test_obstruction_with_common_factor(self):
        m = PolyMatrix(1, 2, [CP_Z, CP_Z * CP_Z])
        out = minor_gcd_certificate(m)
        assert isinstance(out, RankObstruction)
        assert out.gcd == CP_Z
        assert rank_at(m, GaussRat(0)) == 0
        assert rank_at(m, GaussRat(1)) == 1

    def test_budget_exhaustion_is_distinct(self):
        m = PolyMatrix(1, 2, [CP_Z, ONE_MINUS_Z])
        with pytest.raises(MinorBudgetExceeded):
            minor_gcd_certificate(m, budget=1)

    def test_zero_matrix_obstruction(self):
        m = PolyMatrix(1, 2, [CPoly(), CPoly()])
        out = minor_gcd_certificate(m)
        assert isinstance(out, RankObstruction)
        assert out.gcd.is_zero()

    def test_too_tall_rejected(self):
        m = PolyMatrix(2, 1, [CP_Z, CP_ONE])
        with pytest.raises(ValueError):
            minor_gcd_certificate(m)


class TestSolveFullRank:
    def test_partition_of_unity(self):
        m = PolyMatrix(1, 2, [CP_Z, ONE_MINUS_Z])
        cert = minor_gcd_certificate(m)
        x = solve_full_rank(m, [CP_ONE], cert)
        assert x == [CP_ONE, CP_ONE]

    def test_identity_matrix(self):
        m = PolyMatrix.identity(3)
        cert = minor_gcd_certificate(m)
        h = [CP_Z, CP_ONE, Z_MINUS_I]
        assert solve_full_rank(m, h, cert) == h

    def test_unit_column_row(self):
        m = PolyMatrix(1, 4, [Z_MINUS_I, CPoly(), CP_Z, CPoly([GaussRat(-1)])])
        cert = minor_gcd_certificate(m)
        x = solve_full_rank(m, [CP_ONE], cert)
        assert m.mul_vector(x) == [CP_ONE]

    def test_wrong_certificate_rejected(self):
        m = PolyMatrix(1, 2, [CP_Z, ONE_MINUS_Z])
        other = PolyMatrix(1, 2, [CP_ONE, CP_Z])
        cert = minor_gcd_certificate(other)
        with pytest.raises(CertificateMismatch):
            solve_full_rank(m, [CP_ONE], cert)

    @settings(max_examples=25)
    @given(st.lists(cpolys(2), min_size=2, max_size=2))
    def test_random_rhs_on_fixed_system(self, h):
        m = PolyMatrix(2, 3, [
            CP_ONE, CP_Z, CPoly(),
            CPoly(), CP_ONE, CP_Z,
        ])
        cert = minor_gcd_certificate(m)
        x = solve_full_rank(m, h, cert)
        assert m.mul_vector(x) == list(h)
