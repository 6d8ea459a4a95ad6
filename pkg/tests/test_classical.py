"""Classical polynomial layer and its identity suite."""

from fractions import Fraction

from sbopoly import classical as cl
from sbopoly.alphapoly import ALPHA
from sbopoly.poly import Poly, X
from sbopoly.reporting import all_ok

HALF = Fraction(1, 2)


def test_hermite_first_few():
    assert cl.hermite(0) == Poly((1,))
    assert cl.hermite(1) == 2 * X
    assert cl.hermite(2) == 4 * X ** 2 - 2
    assert cl.hermite(3) == 8 * X ** 3 - 12 * X
    assert cl.hermite(4) == 16 * X ** 4 - 48 * X ** 2 + 12


def test_hermite_monic():
    for n in range(9):
        p = cl.hermite_monic(n)
        assert p.leading == 1
        assert 2 ** n * p == cl.hermite(n)


def test_laguerre_first_few():
    assert cl.laguerre(0) == Poly((1,))
    assert cl.laguerre(1) == Poly((ALPHA + 1, Fraction(-1)))
    two = cl.laguerre(2)
    assert two.coeff(2) == HALF
    assert two.coeff(1) == -(ALPHA + 2)
    assert two.coeff(0) == (ALPHA + 1) * (ALPHA + 2) * HALF


def test_laguerre_monic_and_numeric():
    for n in range(7):
        p = cl.laguerre_monic(n)
        assert p.leading == Fraction(1) or p.leading == ALPHA * 0 + 1
        at0 = cl.laguerre(n).subs_alpha(Fraction(0))
        # exponent 0 collapse: L_n(0) = 1
        assert at0(Fraction(0)) == 1


def test_zero_values():
    for n in range(9):
        assert cl.hermite(n)(Fraction(0)) == cl.hermite_zero_value(n)
        assert cl.laguerre(n)(Fraction(0)) == cl.laguerre_zero_value(n)


def test_hermite_identity_suite():
    rows = cl.hermite_identity_checks(12)
    assert all_ok(rows), [r.name for r in rows if not r.ok]


def test_laguerre_identity_suite():
    rows = cl.laguerre_identity_checks(9)
    assert all_ok(rows), [r.name for r in rows if not r.ok]


def test_bridge_suite():
    rows = cl.classical_bridge_checks(10)
    assert all_ok(rows), [r.name for r in rows if not r.ok]


def test_connection_tables_invert_at_spec_sizes():
    # numeric side to degree 20, symbolic side to degree 14
    hermite_rows = cl.hermite_identity_checks(20)
    laguerre_rows = cl.laguerre_identity_checks(14)
    wanted = [r for r in hermite_rows + laguerre_rows
              if "mutually inverse" in r.name or "basis tables" in r.name]
    assert wanted and all(r.ok for r in wanted)
