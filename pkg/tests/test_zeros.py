"""Exact real-zero machinery: Sturm counts, isolation, refinement."""

import math
from fractions import Fraction

import pytest

from sbopoly import zeros
from sbopoly.classical import hermite_monic, laguerre_monic


def laguerre0(n):
    return laguerre_monic(n).subs_alpha(0)
from sbopoly.poly import Poly, X


def test_poly_divmod_reconstructs():
    a = (X - 1) * (X - 2) * (X + 5) + (3 * X + 7)
    b = (X - 1) * (X - 2)
    q, r = zeros.poly_divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_poly_gcd_finds_common_factor():
    common = (X - 3) * (X + Fraction(1, 2))
    a = common * (X - 1)
    b = common * (X + 4)
    g = zeros.poly_gcd(a, b)
    # monic up to content normalization, same roots as `common`
    assert zeros.poly_divmod(common, g)[1] == Poly()
    assert g.degree == 2


def test_square_free_part_drops_multiplicity():
    p = (X - 1) ** 3 * (X + 2)
    sf = zeros.square_free_part(p)
    assert sf.degree == 2
    assert sf(Fraction(1)) == 0
    assert sf(Fraction(-2)) == 0


def test_real_root_count():
    assert zeros.real_root_count((X - 1) * (X - 2) * (X - 3)) == 3
    assert zeros.real_root_count(X * X + 1) == 0
    assert zeros.real_root_count((X * X + 1) * (X - 4)) == 1
    # counts distinct zeros of the square-free part
    assert zeros.real_root_count((X - 1) ** 5) == 1


def test_negative_root_count():
    assert zeros.negative_root_count((X + 1) * (X + 2) * (X - 3)) == 2
    assert zeros.negative_root_count(X * (X - 1)) == 0
    assert zeros.negative_root_count(laguerre0(6)) == 0


def test_cauchy_bound_contains_roots():
    p = (X - 7) * (X + 11) * (X - Fraction(1, 3))
    bound = zeros.cauchy_bound(p)
    assert bound > 11


def test_isolation_separates_all_roots():
    p = hermite_monic(6)
    intervals, sf = zeros.isolate_real_roots(p)
    assert len(intervals) == 6
    for (lo, hi), (lo2, _) in zip(intervals, intervals[1:]):
        assert hi <= lo2
    assert sf == p


def test_isolation_with_exact_midpoint_hit():
    # odd-degree members have a zero at the origin, which bisection hits
    # exactly; the isolator must still separate the nearby symmetric pair
    p = hermite_monic(5)
    intervals, sf = zeros.isolate_real_roots(p)
    assert len(intervals) == 5
    middles = [iv for iv in intervals if iv[0] <= 0 <= iv[1]]
    assert middles == [(Fraction(0), Fraction(0))]


def test_refine_interval_narrows():
    p = X * X - 2
    intervals, sf = zeros.isolate_real_roots(p)
    lo, hi = intervals[1]
    lo, hi = zeros.refine_interval(sf, lo, hi, Fraction(1, 2**40))
    assert hi - lo <= Fraction(1, 2**40)
    assert lo <= Fraction(2**64 + 1) / Fraction(2**64) * Fraction(14142135623730951, 10**16)


def test_root_report_values():
    report = zeros.root_report(hermite_monic(4))
    assert report.degree == 4
    assert report.real_root_count == 4
    assert report.all_simple
    assert not report.all_nonnegative
    # +- sqrt((3 +- sqrt(6))/2)
    expected = sorted(
        s * math.sqrt((3 + t * math.sqrt(6)) / 2) for s in (1, -1) for t in (1, -1)
    )
    for got, want in zip(report.roots, expected):
        assert abs(got - want) < 1e-12


def test_root_report_nonnegative_flag():
    report = zeros.root_report(laguerre0(5))
    assert report.real_root_count == 5
    assert report.all_nonnegative


def test_root_report_residuals_small():
    report = zeros.root_report(hermite_monic(12))
    assert max(report.relative_residuals(hermite_monic(12))) < 1e-9


def test_root_report_constant_and_linear():
    report = zeros.root_report(X * 0 + 5)
    assert report.degree == 0
    assert report.real_root_count == 0
    report = zeros.root_report(2 * X - 3)
    assert report.roots == (1.5,)


def test_interlaces_classical_families():
    for n in range(1, 9):
        assert zeros.interlaces(hermite_monic(n), hermite_monic(n + 1))
        assert zeros.interlaces(laguerre0(n), laguerre0(n + 1))


def test_interlaces_rejects_shared_root():
    a = (X - 1) * (X + 1)
    b = (X - 1) * (X - 2) * (X + 3)
    assert not zeros.interlaces(a, b)


def test_interlaces_rejects_outside_hull():
    lower = (X - 10) * (X + 10)
    upper = (X - 1) * (X + 1) * X
    assert not zeros.interlaces(lower, upper)


def test_interlaces_rejects_crowded_gap():
    lower = (X - Fraction(1, 4)) * (X + Fraction(1, 4))
    upper = (X - 1) * (X + 1) * (X - 2)
    assert not zeros.interlaces(lower, upper)
