"""Moment functionals, Gram matrices and block determinants, in reduced units.

Every integral against the Gaussian or gamma-type weights factors into a
rational (or polynomial-in-exponent) part times a fixed transcendental unit
such as sqrt(pi/2) or Gamma(a+1) 2^(-(a+1)).  We compute only the reduced
rational part and carry the unit as an explicit tag.  Mixing quantities whose
unit ratio is irrational (or depends on the symbolic exponent) is a type
error, raised as UnitError.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .alphapoly import ALPHA, AlphaPoly, fraction_sqrt
from .gammaops import (
    bareiss_det,
    factorial,
    pochhammer,
    two_var_hyper_sum_scaled,
)

HERMITE = "hermite"
LAGUERRE = "laguerre"


class UnitError(TypeError):
    """Arithmetic across incompatible reduced units."""


@dataclass(frozen=True)
class Unit:
    """pi^pi_pow * base^base_pow * (Gamma(a+1) * gamma_base^(-(a+1)))^gamma_count.

    Exponents are Fractions with denominator 1 or 2; bases are positive
    rationals.  A zero exponent normalizes its base to 1 so equality works.
    """

    pi_pow: Fraction = Fraction(0)
    base: Fraction = Fraction(1)
    base_pow: Fraction = Fraction(0)
    gamma_count: int = 0
    gamma_base: Fraction = Fraction(1)

    @staticmethod
    def make(pi_pow=0, base=1, base_pow=0, gamma_count=0, gamma_base=1):
        base = Fraction(base)
        base_pow = Fraction(base_pow)
        if base_pow == 0 or base == 1:
            base, base_pow = Fraction(1), Fraction(0)
        gamma_base = Fraction(gamma_base)
        if gamma_count == 0:
            gamma_base = Fraction(1)
        return Unit(Fraction(pi_pow), base, base_pow, int(gamma_count), gamma_base)

    def __str__(self):
        parts = []
        if self.pi_pow:
            parts.append("pi^%s" % self.pi_pow)
        if self.base_pow:
            parts.append("%s^%s" % (self.base, self.base_pow))
        if self.gamma_count:
            parts.append("[Gamma(a+1) %s^-(a+1)]^%d" % (self.gamma_base, self.gamma_count))
        return " * ".join(parts) if parts else "1"


DIMENSIONLESS = Unit.make()


def unit_ratio(num, den):
    """num/den as an exact Fraction, or UnitError when irrational/symbolic."""
    if num.pi_pow != den.pi_pow:
        raise UnitError("pi power mismatch: %s vs %s" % (num, den))
    if num.gamma_count != den.gamma_count:
        raise UnitError("gamma factor mismatch: %s vs %s" % (num, den))
    if num.gamma_count and num.gamma_base != den.gamma_base:
        raise UnitError("gamma base mismatch: %s vs %s" % (num, den))
    # base_num^p / base_den^q with half-integer p, q: square it, then take
    # the exact square root if one exists.
    squared = (num.base ** int(2 * num.base_pow)
               / den.base ** int(2 * den.base_pow))
    root = fraction_sqrt(squared)
    if root is None:
        raise UnitError("irrational unit ratio: %s vs %s" % (num, den))
    return root


def same_quantity(a, b):
    """Compare (value, unit) pairs exactly, converting units when legal."""
    va, ua = a
    vb, ub = b
    return va == vb * unit_ratio(ub, ua)


# ---------------------------------------------------------------------------
# Reduced moments and moment functionals.
# ---------------------------------------------------------------------------


def hermite_moment(j, scale=1):
    """j-th moment of exp(-scale x^2) on the line, reduced by sqrt(pi/scale):
    zero at odd j, (1/2)_r scale^(-r) at j = 2r."""
    if j % 2:
        return Fraction(0)
    r = j // 2
    return pochhammer(Fraction(1, 2), r) * Fraction(scale) ** (-r)


def hermite_moment_unit(scale=1):
    return Unit.make(pi_pow=Fraction(1, 2), base=scale, base_pow=Fraction(-1, 2))


def laguerre_moment(j, scale=1, alpha=None):
    """j-th moment of exp(-scale x) x^a on the half line, reduced by
    Gamma(a+1) scale^(-(a+1)): (a+1)_j scale^(-j)."""
    base = ALPHA + 1 if alpha is None else Fraction(alpha) + 1
    return pochhammer(base, j) * Fraction(scale) ** (-j)


def laguerre_moment_unit(scale=1):
    return Unit.make(gamma_count=1, gamma_base=scale)


@dataclass(frozen=True)
class MomentFunctional:
    """Reduced integration against one weight; inner(p, q) = <p q>."""

    family: str
    scale: Fraction = Fraction(1)
    alpha: object = None  # None => symbolic exponent (Laguerre only)

    def moment(self, j):
        if self.family == HERMITE:
            return hermite_moment(j, self.scale)
        if self.family == LAGUERRE:
            return laguerre_moment(j, self.scale, self.alpha)
        raise ValueError("unknown family %r" % (self.family,))

    @property
    def unit(self):
        if self.family == HERMITE:
            return hermite_moment_unit(self.scale)
        return laguerre_moment_unit(self.scale)

    def integrate(self, p):
        acc = Fraction(0)
        for j, c in enumerate(p.coeffs):
            if c:
                acc = acc + c * self.moment(j)
        return acc

    def inner(self, p, q):
        return self.integrate(p * q)


def hermite_pair(mu=Fraction(2), scale=Fraction(1)):
    """First and second functionals for weights exp(-scale x^2),
    exp(-mu scale x^2)."""
    scale = Fraction(scale)
    return (MomentFunctional(HERMITE, scale),
            MomentFunctional(HERMITE, Fraction(mu) * scale))


def laguerre_pair(mu=Fraction(2), scale=Fraction(1), alpha=None):
    scale = Fraction(scale)
    return (MomentFunctional(LAGUERRE, scale, alpha),
            MomentFunctional(LAGUERRE, Fraction(mu) * scale, alpha))


# ---------------------------------------------------------------------------
# Second-product Gram entries over the classical bases (reduced).
# ---------------------------------------------------------------------------


def hermite_gamma(j, k, mu=Fraction(2)):
    """<H_j, H_k> against exp(-mu x^2), reduced.

    Returns (value, unit): zero across parities; in units sqrt(pi/mu) on the
    even-even block and sqrt(pi/mu^3) on the odd-odd block.
    """
    mu = Fraction(mu)
    if (j + k) % 2:
        return Fraction(0), Unit.make(pi_pow=Fraction(1, 2),
                                      base=mu, base_pow=Fraction(-1, 2))
    z = Fraction(-1) / mu
    if j % 2 == 0:
        a, b = j // 2, k // 2
        value = (Fraction((-1) ** (a + b)) * Fraction(2) ** (2 * (a + b))
                 * two_var_hyper_sum_scaled(a, b, Fraction(1, 2), z, z))
        return value, Unit.make(pi_pow=Fraction(1, 2), base=mu,
                                base_pow=Fraction(-1, 2))
    a, b = (j - 1) // 2, (k - 1) // 2
    value = (Fraction((-1) ** (a + b)) * Fraction(2) ** (2 * (a + b) + 1)
             * two_var_hyper_sum_scaled(a, b, Fraction(3, 2), z, z))
    return value, Unit.make(pi_pow=Fraction(1, 2), base=mu,
                            base_pow=Fraction(-3, 2))


def hermite_gamma_mu2_closed(j, k):
    """Separated-arguments collapse at mu=2, in the same units as above."""
    if (j + k) % 2:
        return Fraction(0), hermite_gamma(j, k, 2)[1]
    if j % 2 == 0:
        a, b = j // 2, k // 2
        value = (Fraction((-1) ** (a + b)) * Fraction(2) ** (a + b)
                 * pochhammer(Fraction(1, 2), a + b))
        return value, Unit.make(pi_pow=Fraction(1, 2), base=2,
                                base_pow=Fraction(-1, 2))
    a, b = (j - 1) // 2, (k - 1) // 2
    value = (Fraction((-1) ** (a + b)) * Fraction(2) ** (a + b + 1)
             * pochhammer(Fraction(3, 2), a + b))
    return value, Unit.make(pi_pow=Fraction(1, 2), base=2,
                            base_pow=Fraction(-3, 2))


def laguerre_gamma(j, k, mu=Fraction(2), alpha=None):
    """<L_j, L_k> against exp(-mu x) x^a, reduced by Gamma(a+1) mu^(-(a+1))."""
    mu = Fraction(mu)
    c = ALPHA + 1 if alpha is None else Fraction(alpha) + 1
    z = Fraction(-1) / mu
    value = two_var_hyper_sum_scaled(j, k, c, z, z) * Fraction(
        1, factorial(j) * factorial(k))
    return value, Unit.make(gamma_count=1, gamma_base=mu)


def laguerre_gamma_mu2_closed(j, k, alpha=None):
    c = ALPHA + 1 if alpha is None else Fraction(alpha) + 1
    value = pochhammer(c, j + k) * Fraction(1, 2 ** (j + k)
                                            * factorial(j) * factorial(k))
    return value, Unit.make(gamma_count=1, gamma_base=2)


# ---------------------------------------------------------------------------
# Gram matrices.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple  # tuple of row tuples
    unit: Unit
    label: str = ""

    @property
    def size(self):
        return len(self.entries)

    def determinant(self):
        return bareiss_det([list(row) for row in self.entries])

    def leading_principal_minors(self):
        out = []
        for s in range(1, self.size + 1):
            out.append(bareiss_det([list(row[:s]) for row in self.entries[:s]]))
        return out


def hermite_classical_gram(parity, lo, hi, mu=Fraction(2)):
    """Second-product Gram over H_(2j) (parity 0) or H_(2j+1) (parity 1),
    half-indices lo..hi inclusive, reduced entries with a common unit."""
    rows = []
    unit = None
    for a in range(lo, hi + 1):
        row = []
        for b in range(lo, hi + 1):
            j = 2 * a + parity
            k = 2 * b + parity
            value, u = hermite_gamma(j, k, mu)
            unit = u if unit is None else unit
            row.append(value)
        rows.append(tuple(row))
    return GramMatrix(tuple(rows), unit,
                      "hermite %s block" % ("odd" if parity else "even"))


def laguerre_classical_gram(lo, hi, mu=Fraction(2), alpha=None):
    rows = []
    unit = None
    for j in range(lo, hi + 1):
        row = []
        for k in range(lo, hi + 1):
            value, u = laguerre_gamma(j, k, mu, alpha)
            unit = u if unit is None else unit
            row.append(value)
        rows.append(tuple(row))
    return GramMatrix(tuple(rows), unit, "laguerre block")


def monomial_gram(functional, size):
    """Gram of 1, x, ..., x^(size-1) under one functional (Hankel matrix)."""
    rows = []
    for j in range(size):
        rows.append(tuple(functional.moment(j + k) for k in range(size)))
    return GramMatrix(tuple(rows), functional.unit, "monomial gram")


# ---------------------------------------------------------------------------
# Block determinants (Z) and their closed forms.
# ---------------------------------------------------------------------------


def hermite_z(i, n, parity=0):
    """Closed-form reduced determinant of the half-index block i..n of the
    hermite second-product Gram at mu=2; (value, unit), with the empty block
    n = i-1 equal to one.

    value = 2^((i+n) g) * prod_{j=i..n} (j-i)! (c)_{i+j},  c = 1/2 or 3/2,
    unit = (pi/2)^(g/2), g = n - i + 1.
    """
    if n == i - 1:
        return Fraction(1), DIMENSIONLESS
    if n < i - 1:
        raise ValueError("block needs n >= i-1")
    g = n - i + 1
    c = Fraction(1, 2) if parity == 0 else Fraction(3, 2)
    value = Fraction(2) ** ((i + n) * g)
    for j in range(i, n + 1):
        value *= factorial(j - i) * pochhammer(c, i + j)
    unit = Unit.make(pi_pow=Fraction(g, 2), base=2, base_pow=Fraction(-g, 2))
    return value, unit


def laguerre_z(i, n, alpha=None):
    """Closed-form reduced block determinant for the laguerre pair at mu=2:

    value = 2^(-(i+n) g) * prod_{j=i..n} (j-i)! (a+1)_{i+j} / (j!)^2,
    unit = (Gamma(a+1) 2^(-(a+1)))^g.
    """
    if n == i - 1:
        return Fraction(1), DIMENSIONLESS
    if n < i - 1:
        raise ValueError("block needs n >= i-1")
    g = n - i + 1
    base = ALPHA + 1 if alpha is None else Fraction(alpha) + 1
    value = Fraction(2) ** (-(i + n) * g)
    for j in range(i, n + 1):
        value = value * pochhammer(base, i + j) * Fraction(
            factorial(j - i), factorial(j) ** 2)
    unit = Unit.make(gamma_count=g, gamma_base=2)
    return value, unit


def hermite_z_from_gram(i, n, parity=0):
    """Same block rebuilt as an explicit determinant of reduced Gram entries."""
    if n == i - 1:
        return Fraction(1), DIMENSIONLESS
    gram = hermite_classical_gram(parity, i, n, Fraction(2))
    g = n - i + 1
    det_unit = Unit.make(pi_pow=Fraction(g, 2), base=gram.unit.base,
                         base_pow=gram.unit.base_pow * g)
    return gram.determinant(), det_unit


def laguerre_z_from_gram(i, n, alpha=None):
    if n == i - 1:
        return Fraction(1), DIMENSIONLESS
    gram = laguerre_classical_gram(i, n, Fraction(2), alpha)
    g = n - i + 1
    det_unit = Unit.make(gamma_count=g, gamma_base=gram.unit.gamma_base)
    return gram.determinant(), det_unit


# ---------------------------------------------------------------------------
# Bivariate generating-function truncations for the Gram entries.
# ---------------------------------------------------------------------------


def _biv_mul(a, b, order):
    out = {}
    for (j1, k1), c1 in a.items():
        for (j2, k2), c2 in b.items():
            j, k = j1 + j2, k1 + k2
            if j + k > order:
                continue
            key = (j, k)
            out[key] = out.get(key, Fraction(0)) + c1 * c2
    return {key: c for key, c in out.items() if c}


def hermite_gf_gamma_table(order, mu=Fraction(2)):
    """Coefficients of the closed bivariate kernel for <F_s, F_t>_2.

    Expands exp[(2 s t + (1-mu)(s^2 + t^2))/mu] to total degree <= order and
    returns {(j,k): gamma_red(j,k)} in units sqrt(pi/mu), where
    gamma_red(j,k) = j! k! [s^j t^k].
    """
    mu = Fraction(mu)
    g = {(1, 1): Fraction(2) / mu}
    if mu != 1:
        g[(2, 0)] = (1 - mu) / mu
        g[(0, 2)] = (1 - mu) / mu
    series = {(0, 0): Fraction(1)}
    power = {(0, 0): Fraction(1)}
    fact = 1
    for m in range(1, order // 2 + 1):
        power = _biv_mul(power, g, order)
        fact *= m
        for key, c in power.items():
            series[key] = series.get(key, Fraction(0)) + c / fact
    table = {}
    for (j, k), c in series.items():
        table[(j, k)] = c * factorial(j) * factorial(k)
    return table, Unit.make(pi_pow=Fraction(1, 2), base=mu,
                            base_pow=Fraction(-1, 2))


def laguerre_gf_gamma_table(order, mu=Fraction(2), alpha=None):
    """Coefficients of the closed kernel for the laguerre pair.

    Expands (1 + v)^(-(a+1)) with v = ((mu-2) s t - (mu-1)(s + t))/mu to
    total degree <= order; returns {(j,k): gamma_red(j,k)} in units
    Gamma(a+1) mu^(-(a+1)), where gamma_red(j,k) = [s^j t^k].
    """
    mu = Fraction(mu)
    base = ALPHA + 1 if alpha is None else Fraction(alpha) + 1
    v = {}
    if mu != 2:
        v[(1, 1)] = (mu - 2) / mu
    v[(1, 0)] = -(mu - 1) / mu
    v[(0, 1)] = -(mu - 1) / mu
    series = {(0, 0): pochhammer(base, 0)}
    power = {(0, 0): Fraction(1)}
    for m in range(1, order + 1):
        power = _biv_mul(power, v, order)
        if not power:
            break
        coeff = pochhammer(base, m) * Fraction((-1) ** m, factorial(m))
        for key, c in power.items():
            series[key] = series.get(key, Fraction(0)) + coeff * c
    return series, Unit.make(gamma_count=1, gamma_base=mu)
