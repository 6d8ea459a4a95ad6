"""Acceptance gate: one test per deliverable property, at full grid sizes.

Each test asserts a complete verification suite (or a named slice of one)
at the grid the property is promised to hold on, so ``pytest -v`` prints
one pass/fail line per promise.  Grids here are the contract; the smaller
grids in the per-module tests are for quick iteration.
"""

import math
import time
from fractions import Fraction

from sbopoly import classical, hermite_sbo as hs, laguerre_sbo as ls
from sbopoly import oracle, suites, zeros
from sbopoly.classical import hermite_monic, laguerre_monic
from sbopoly.reporting import EXPECTED_NEGATIVE, FAIL

_memo = {}


def _rows(key, thunk):
    if key not in _memo:
        _memo[key] = thunk()
    return _memo[key]


def _assert_ok(rows):
    bad = [r for r in rows if r.status == FAIL]
    assert not bad, "failing checks: " + "; ".join(
        "%s (%s)" % (r.name, r.detail or "no detail") for r in bad)


def _orthogonality_rows():
    return (_rows("orth-h", lambda: hs.orthogonality_checks(8, 12))
            + _rows("orth-l", lambda: ls.orthogonality_checks(6, 10)))


def test_golden_tables_exact_and_fast():
    start = time.perf_counter()
    _assert_ok(hs.golden_checks())
    _assert_ok(ls.golden_checks())
    assert time.perf_counter() - start < 5.0


def test_constraint_orthogonality_full_grid():
    start = time.perf_counter()
    rows = [r for r in _orthogonality_rows() if "first-product" in r.name]
    assert len(rows) == 2
    _assert_ok(rows)
    assert time.perf_counter() - start < 60.0


def test_mutual_orthogonality_and_norms_full_grid():
    rows = [r for r in _orthogonality_rows() if "second-product" in r.name]
    assert len(rows) == 4
    _assert_ok(rows)


def test_route_equivalence_and_oracle_agreement():
    _assert_ok(hs.route_checks(8, 12))
    _assert_ok(ls.route_checks(6, 10))
    _assert_ok(_rows("oracle-h", lambda: oracle.hermite_agreement_checks(8, 12)))
    _assert_ok(_rows("oracle-l", lambda: oracle.laguerre_agreement_checks(6, 10)))
    # away from the doubled-decay weight no closed form exists; the linear
    # solver must still produce an exactly diagonal second-product Gram
    _assert_ok(oracle.general_weight_checks(3, 6, mu=Fraction(3)))


def test_differentiation_identities_full_grid():
    _assert_ok(hs.identity_checks(8, 12))
    _assert_ok(ls.identity_checks(6, 10))


def test_connection_matrices_mutually_inverse():
    # block-family tables: full degree 20 rational, 14 symbolic
    _assert_ok(hs.connection_checks(8, 10))
    _assert_ok(ls.connection_checks(6, 8))
    fwd, bwd = ls.connection_matrices(0, 15)
    assert classical.matrices_are_inverse(fwd, bwd)
    # classical-basis tables at the same sizes
    _assert_ok([r for r in classical.hermite_identity_checks(20)
                if "inverse" in r.name or "basis tables" in r.name])
    _assert_ok([r for r in classical.laguerre_identity_checks(14)
                if "inverse" in r.name or "basis tables" in r.name])


def test_zero_values_three_routes_and_tables():
    rows_h = hs.zero_value_checks(6, 8)
    rows_l = ls.zero_value_checks(6, 8)
    _assert_ok(rows_h)
    _assert_ok(rows_l)
    # the uncorrected series parameter must be caught, not silently absorbed
    assert any(r.status == EXPECTED_NEGATIVE for r in rows_h)
    assert hs.zero_value_printed_variant(2, 4) == Fraction(-3, 8)
    assert hs.zero_value(2, 4) == Fraction(1, 8)
    assert hs.closed(2, 4)(Fraction(0)) == Fraction(1, 8)


def test_family_bridges_exact():
    _assert_ok(ls.bridge_checks(6, 8))
    _assert_ok(classical.classical_bridge_checks(10))


def test_zero_structure_reports():
    _assert_ok(suites.zero_structure_checks(6, 10, 6, 8, 10))
    # benchmark member pair at integer exponent zero: radical root values
    quad = ls.closed(1, 2).subs_alpha(0)
    cubic = ls.closed(1, 3).subs_alpha(0)
    expect_quad = [(5 - math.sqrt(17)) / 4, (5 + math.sqrt(17)) / 4]
    expect_cubic = [2 - math.sqrt(3), 1.0, 2 + math.sqrt(3)]
    got_quad = zeros.root_report(quad).roots
    got_cubic = zeros.root_report(cubic).roots
    for got, want in zip(got_quad, expect_quad):
        assert abs(got - want) < 1e-9
    for got, want in zip(got_cubic, expect_cubic):
        assert abs(got - want) < 1e-9
    # adjacent-degree members of a block family need not interlace ...
    assert not zeros.interlaces(quad, cubic)
    # ... while the classical families always do
    for n in range(1, 10):
        assert zeros.interlaces(hermite_monic(n), hermite_monic(n + 1))
        assert zeros.interlaces(laguerre_monic(n).subs_alpha(0),
                                laguerre_monic(n + 1).subs_alpha(0))


def test_exact_kernel_layer():
    start = time.perf_counter()
    _assert_ok(suites.exact_kernel_checks(8))
    _assert_ok(suites.measure_checks(order=8, z_top=7))
    assert time.perf_counter() - start < 10.0


def test_generating_function_cross_checks_order_12():
    _assert_ok(suites.measure_checks(order=12))
