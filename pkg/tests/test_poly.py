"""Polynomial arithmetic: the x-ring and the symbolic-exponent scalars."""

from fractions import Fraction

import pytest

from sbopoly.alphapoly import ALPHA, AlphaPoly, fraction_sqrt, interpolate_alpha
from sbopoly.poly import (EVEN, IrrationalScaleError, ODD, Poly, X, monomial,
                          pretty, latex, scale_arg_monic, scalar_str)

HALF = Fraction(1, 2)


# -- scalars ----------------------------------------------------------------


def test_alphapoly_basics():
    p = ALPHA * ALPHA + 3 * ALPHA + 2
    assert p.degree == 2
    assert p(Fraction(1)) == 6
    assert p.coeff(1) == 3
    assert (p - p) == AlphaPoly(())
    assert not (p - p)


def test_alphapoly_exact_div():
    p = (ALPHA + 1) * (ALPHA + 2)
    assert p.exact_div(ALPHA + 1) == ALPHA + 2
    with pytest.raises(ValueError):
        p.exact_div(ALPHA + 3)


def test_alphapoly_render():
    assert (ALPHA * ALPHA + 3 * ALPHA + 4).render("a") == "a^2+3a+4"
    assert (-ALPHA + 1).render("a") == "-a+1"
    assert AlphaPoly(()).render("a") == "0"


def test_interpolation_round_trip():
    target = AlphaPoly((Fraction(7), Fraction(-3, 2), Fraction(0), Fraction(1)))
    xs = [Fraction(k) for k in range(4)]
    assert interpolate_alpha(xs, [target(x) for x in xs]) == target


def test_fraction_sqrt():
    assert fraction_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert fraction_sqrt(Fraction(2)) is None


# -- the x-ring ---------------------------------------------------------------


def test_poly_construction_normalizes():
    assert Poly((1, 2, 0, 0)).degree == 1
    assert Poly(()).degree == -1
    assert Poly((0,)).degree == -1
    assert monomial(3).coeffs == (Fraction(0),) * 3 + (Fraction(1),)


def test_poly_arithmetic():
    p = (X - 1) * (X + 1)
    assert p == X * X - 1
    assert p.degree == 2
    assert p(Fraction(3)) == 8
    assert p.derivative() == 2 * X
    assert (p - p).degree == -1


def test_poly_mixed_scalars():
    p = (ALPHA + 1) * X + 1
    q = p * p
    assert q.coeff(2) == (ALPHA + 1) * (ALPHA + 1)
    assert q.subs_alpha(HALF) == Fraction(9, 4) * X * X + 3 * X + 1
    assert p.has_alpha
    assert not (X * X - 1).has_alpha


def test_parity_and_composition():
    even = X ** 4 - 3 * X ** 2 + 1
    assert even.parity() == EVEN
    assert (X ** 3 - X).parity() == ODD
    q = X * X - 2
    assert q.compose_x_squared() == X ** 4 - 2
    assert q.compose_x_squared().times_x() == X ** 5 - 2 * X


def test_eval_float():
    p = X * X - 2
    assert abs(p.eval_float(1.5) - 0.25) < 1e-15


def test_scale_arg_monic_linear():
    # q(x) = c^-n p(c x) keeps monicity for any rational c
    p = X ** 2 + 3 * X + 5
    q = scale_arg_monic(p, Fraction(3), "linear")
    assert q == X ** 2 + X + Fraction(5, 9)
    assert q.leading == 1


def test_scale_arg_monic_sqrt():
    # even coefficient gaps let sqrt(c) powers stay rational
    p = X ** 4 - 3 * X ** 2 + 2
    q = scale_arg_monic(p, Fraction(4), "sqrt")
    assert q == X ** 4 - Fraction(3, 4) * X ** 2 + Fraction(2, 16)
    with pytest.raises(IrrationalScaleError):
        scale_arg_monic(X ** 2 + X + 1, Fraction(2), "sqrt")


def test_scale_x():
    p = X ** 2 + X
    assert p.scale_x(2) == 4 * X ** 2 + 2 * X


# -- rendering ----------------------------------------------------------------


def test_pretty_rational():
    assert pretty(X ** 4 - Fraction(7, 4) * X ** 2 + Fraction(1, 8)) \
        == "x^4 - 7/4 x^2 + 1/8"
    assert pretty(Poly(())) == "0"
    assert pretty(X) == "x"
    assert pretty(-X + 1) == "-x + 1"


def test_pretty_symbolic():
    p = X * X - (ALPHA + 2) * X + (ALPHA + 1) * (ALPHA + 2) * Fraction(1, 4)
    assert pretty(p) == "x^2 - (a+2) x + (a^2+3a+2)/4"


def test_latex_rational():
    assert latex(X ** 2 - Fraction(1, 4)) == r"x^{2} - \frac{1}{4}"


def test_scalar_str():
    assert scalar_str(Fraction(-3, 4)) == "-3/4"
    assert scalar_str((ALPHA * ALPHA + 3 * ALPHA + 4)) == "a^2+3a+4"
    assert scalar_str((ALPHA + 1) * HALF) == "(a+1)/2"
