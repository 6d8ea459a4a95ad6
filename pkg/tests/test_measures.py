"""Reduced moments, units, Gram entries, kernel expansions."""

from fractions import Fraction

import pytest

from sbopoly import measures as ms
from sbopoly.alphapoly import ALPHA, AlphaPoly
from sbopoly.poly import monomial
from sbopoly.reporting import all_ok
from sbopoly.suites import measure_checks

HALF = Fraction(1, 2)


def test_hermite_moments():
    assert ms.hermite_moment(0) == 1
    assert ms.hermite_moment(1) == 0
    assert ms.hermite_moment(2) == HALF
    assert ms.hermite_moment(4) == Fraction(3, 4)
    assert ms.hermite_moment(2, 4) == HALF / 4


def test_laguerre_moments():
    assert ms.laguerre_moment(0) == AlphaPoly((1,))
    assert ms.laguerre_moment(2) == (ALPHA + 1) * (ALPHA + 2)
    assert ms.laguerre_moment(2, 2) == (ALPHA + 1) * (ALPHA + 2) / Fraction(4)
    assert ms.laguerre_moment(1, 1, HALF) == Fraction(3, 2)


def test_unit_conversion():
    quantity = (ms.hermite_moment(4, 4), ms.hermite_moment_unit(4))
    rescaled = (ms.hermite_moment(4, 4) / 2, ms.hermite_moment_unit(1))
    assert ms.same_quantity(quantity, rescaled)


def test_unit_mismatch_raises():
    with pytest.raises(ms.UnitError):
        ms.unit_ratio(ms.hermite_moment_unit(1), ms.laguerre_moment_unit(1))
    with pytest.raises(ms.UnitError):
        # sqrt(3) is not rational
        ms.unit_ratio(ms.hermite_moment_unit(3), ms.hermite_moment_unit(1))


def test_functional_inner():
    first, second = ms.hermite_pair()
    assert first.inner(monomial(1), monomial(1)) == HALF
    assert second.inner(monomial(1), monomial(1)) == Fraction(1, 4)
    assert second.moment(2) == HALF / 2


def test_gamma_mu2_collapse():
    for j in range(8):
        for k in range(8):
            assert (ms.hermite_gamma(j, k, 2)
                    == ms.hermite_gamma_mu2_closed(j, k))
    for j in range(6):
        for k in range(6):
            assert (ms.laguerre_gamma(j, k, 2)
                    == ms.laguerre_gamma_mu2_closed(j, k))


def test_block_determinant_closed_forms():
    for parity in (0, 1):
        for i in range(4):
            for n in range(i - 1, 5):
                assert ms.same_quantity(ms.hermite_z(i, n, parity),
                                        ms.hermite_z_from_gram(i, n, parity))
    for i in range(4):
        for n in range(i - 1, 4):
            closed = ms.laguerre_z(i, n)
            brute = ms.laguerre_z_from_gram(i, n)
            assert closed == brute


def test_gf_table_matches_direct_products():
    table, unit = ms.hermite_gf_gamma_table(8, Fraction(2))
    assert unit == ms.hermite_gamma(0, 0, Fraction(2))[1]
    for j in range(9):
        for k in range(9 - j):
            direct = ms.hermite_gamma(j, k, Fraction(2))[0]
            if j % 2:
                direct = direct / 2
            assert table.get((j, k), Fraction(0)) == direct

    ltable, lunit = ms.laguerre_gf_gamma_table(8, Fraction(2))
    for j in range(9):
        for k in range(9 - j):
            assert (ltable.get((j, k), AlphaPoly(()))
                    == ms.laguerre_gamma(j, k, Fraction(2))[0])


def test_measures_suite():
    rows = measure_checks(order=10, z_top=5)
    assert all_ok(rows), [r.name for r in rows if not r.ok]
