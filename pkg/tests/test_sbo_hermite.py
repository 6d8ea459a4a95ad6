"""Gaussian-pair block family: construction routes, identities, tables."""

from fractions import Fraction

import pytest

from sbopoly import hermite_sbo as hs
from sbopoly.classical import hermite_monic
from sbopoly.measures import hermite_pair
from sbopoly.poly import X, pretty
from sbopoly.reporting import EXPECTED_NEGATIVE, all_ok

HALF = Fraction(1, 2)


def test_canonical_order_pairs_indices():
    # even degrees pair order 2m+1 with 2m+2, odd degrees 2m with 2m+1
    assert hs.canonical_order(0, 4) == 0
    assert hs.canonical_order(1, 4) == 2
    assert hs.canonical_order(2, 4) == 2
    assert hs.canonical_order(3, 4) == 4
    assert hs.canonical_order(0, 5) == 1
    assert hs.canonical_order(1, 5) == 1
    assert hs.canonical_order(2, 5) == 3


def test_half_indices():
    parity, ih, nh = hs.half_indices(2, 4)
    assert (parity, ih, nh) == (0, 1, 2)
    parity, ih, nh = hs.half_indices(1, 5)
    assert (parity, ih, nh) == (1, 0, 2)


def test_kappa_values():
    assert hs.kappa(0, 1) == HALF
    assert hs.kappa(1, 1) == 0
    assert hs.kappa(2, 4) == 1
    # vanishes on and below the diagonal
    for i in range(4):
        assert hs.kappa(i, i) == 0


def test_block_table():
    assert pretty(hs.closed(0, 2)) == "x^2 - 1/4"
    assert pretty(hs.closed(1, 4)) == "x^4 - 7/4 x^2 + 1/8"
    assert pretty(hs.closed(1, 6)) == "x^6 - 4 x^4 + 47/16 x^2 - 11/32"
    assert pretty(hs.closed(2, 5)) == "x^5 - 13/4 x^3 + 9/8 x"
    assert all_ok(hs.golden_checks())


def test_norms_against_functional():
    first, second = hermite_pair()
    for i in range(4):
        for n in range(i, i + 5):
            p = hs.closed(i, n)
            assert second.inner(p, p) == hs.norm(i, n)


def test_first_product_constraints():
    first, _ = hermite_pair()
    for i in range(5):
        for n in range(i, i + 6):
            p = hs.closed(i, n)
            for m in range(i):
                assert first.inner(X ** m if m else X * 0 + 1, p) == 0


def test_route_equivalence_small():
    for i in range(4):
        top = i + 6
        base = hs.family_closed(i, top)
        assert hs.family_diff1(i, top) == base
        assert hs.family_five_term(i, top) == base
        assert hs.family_four_term(i, top) == base


def test_degenerate_low_degrees():
    assert hs.closed(0, 0) == X * 0 + 1
    assert hs.closed(3, 3) == hermite_monic(3)
    assert hs.closed(2, 3) == hermite_monic(3)


def test_zero_value_three_ways():
    for i in range(5):
        for n in range(i, i + 7):
            direct = hs.closed(i, n)(Fraction(0))
            assert direct == hs.zero_value(i, n)
            if n % 2 == 0:
                _, ih, nh = hs.half_indices(i, n)
                assert direct == hs.zero_value_sum(ih, nh)
                assert direct == hs.zero_from_p(ih, nh, hs.p_closed(ih, nh))
            else:
                assert direct == 0


def test_zero_value_printed_variant_differs():
    # the unshifted series parameter gives -3/8 where the table says 1/8;
    # at the first nontrivial member the two still coincide
    assert hs.zero_value_printed_variant(1, 2) == hs.zero_value(1, 2)
    assert hs.zero_value_printed_variant(2, 4) == Fraction(-3, 8)
    assert hs.zero_value(2, 4) == Fraction(1, 8)


def test_suite_bundles():
    assert all_ok(hs.orthogonality_checks(4, 6))
    assert all_ok(hs.route_checks(4, 6))
    assert all_ok(hs.identity_checks(4, 6))
    assert all_ok(hs.connection_checks(4, 7))
    assert all_ok(hs.subleading_checks(4, 6))
    assert all_ok(hs.summed_form_checks(2, 5))
    assert all_ok(hs.special_case_checks(10))


def test_zero_value_suite_contains_expected_negative():
    rows = hs.zero_value_checks(4, 6)
    assert all_ok(rows)
    assert any(r.status == EXPECTED_NEGATIVE for r in rows)


@pytest.mark.parametrize("scale", [Fraction(3), Fraction(1, 4), Fraction(9)])
def test_scaling(scale):
    assert all_ok(hs.scaling_checks(scale, 2, 4))
