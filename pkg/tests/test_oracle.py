"""The linear-system reference construction and its agreement suites."""

from fractions import Fraction

import pytest

from sbopoly import hermite_sbo as hs
from sbopoly import laguerre_sbo as ls
from sbopoly import oracle
from sbopoly.measures import hermite_pair, laguerre_pair
from sbopoly.poly import X
from sbopoly.reporting import all_ok


def test_solve_linear_small_system():
    rows = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    rhs = [Fraction(5), Fraction(10)]
    x, y = oracle.solve_linear(rows, rhs)
    assert (x, y) == (Fraction(1), Fraction(3))


def test_solve_linear_singular_raises():
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    with pytest.raises(oracle.SingularSystemError):
        oracle.solve_linear(rows, [Fraction(0), Fraction(0)])


def test_block_member_satisfies_defining_properties():
    first, second = hermite_pair()
    fam = oracle.family(first, second, 2, 6)
    for n in range(2, 7):
        p = fam[n]
        assert p.degree == n
        assert p.coeff(n) == 1
        # orthogonal to everything below the block floor under the first form
        for m in range(2):
            assert first.inner(X ** m if m else X * 0 + 1, p) == 0
        # mutually orthogonal under the second form
        for m in range(2, n):
            assert second.inner(fam[m], p) == 0


def test_block_member_rejects_bad_indices():
    first, second = hermite_pair()
    with pytest.raises(ValueError):
        oracle.block_member(first, second, 3, 2, {})


def test_hermite_family_matches_closed_forms():
    fam = oracle.hermite_family(2, 6)
    for n in range(2, 7):
        assert fam[n] == hs.closed(2, n)


def test_laguerre_family_matches_closed_forms():
    alpha0 = Fraction(1, 2)
    fam = oracle.laguerre_family(1, 5, alpha0)
    for n in range(1, 6):
        assert fam[n] == ls.closed(1, n).subs_alpha(alpha0)


def test_laguerre_symbolic_family_matches_closed_forms():
    fam = oracle.laguerre_family_symbolic(1, 4)
    for n in range(1, 5):
        assert fam[n] == ls.closed(1, n)


def test_agreement_suites():
    assert all_ok(oracle.hermite_agreement_checks(2, 4))
    assert all_ok(oracle.laguerre_agreement_checks(2, 3))


def test_equal_weight_collapse():
    # with mu = 1 the two forms coincide and every order gives the
    # plain orthogonal family
    assert all_ok(oracle.equal_weight_checks(6))


def test_general_weight_defining_properties():
    assert all_ok(oracle.general_weight_checks(2, 4, mu=Fraction(3)))


def test_scaling_consistency():
    assert all_ok(oracle.scaling_consistency_checks(2, 4, scale=Fraction(3)))
