"""Exact scalars for the symbolic weight parameter: dense polynomials in Q[alpha].

The Laguerre side of the library keeps the weight exponent ``alpha`` symbolic,
so every "number" there is a polynomial in alpha with Fraction coefficients.
AlphaPoly is that scalar type: immutable, hashable, and closed under the ring
operations plus *exact* division (division that would leave a remainder is an
error, never an approximation).
"""

from __future__ import annotations

import math
from fractions import Fraction


def fraction_sqrt(value):
    """Exact square root of a non-negative Fraction, or None if irrational."""
    value = Fraction(value)
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError("rational coefficient required, got %r" % (value,))


class AlphaPoly:
    """Polynomial in alpha, ascending dense coefficients, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def is_constant(self):
        return len(self.coeffs) <= 1

    def constant_value(self):
        if not self.is_constant:
            raise ValueError("not a constant: %s" % (self,))
        return self.coeffs[0] if self.coeffs else Fraction(0)

    @property
    def leading(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __hash__(self):
        if self.is_constant:
            return hash(self.constant_value())
        return hash(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, AlphaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_constant and self.constant_value() == other
        return NotImplemented

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(value):
        if isinstance(value, AlphaPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return AlphaPoly((value,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return AlphaPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return AlphaPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return AlphaPoly()
        # Clear denominators so the convolution runs on plain integers.
        da = math.lcm(*(c.denominator for c in a))
        db = math.lcm(*(c.denominator for c in b))
        ia = [c.numerator * (da // c.denominator) for c in a]
        ib = [c.numerator * (db // c.denominator) for c in b]
        out = [0] * (len(ia) + len(ib) - 1)
        for j, x in enumerate(ia):
            if x:
                for k, y in enumerate(ib):
                    out[j + k] += x * y
        den = da * db
        return AlphaPoly(tuple(Fraction(v, den) for v in out))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("non-negative integer power required")
        result = AlphaPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        dlead = other.leading
        dd = other.degree
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if not c:
                continue
            factor = c / dlead
            q[k - dd] = factor
            for j, oc in enumerate(other.coeffs):
                rem[k - dd + j] -= factor * oc
        return AlphaPoly(q), AlphaPoly(rem)

    def exact_div(self, other):
        """Divide exactly; raise if the division leaves a remainder."""
        other = self._coerce(other)
        if other is None:
            raise TypeError("cannot divide AlphaPoly by %r" % (other,))
        if other.is_constant:
            c = other.constant_value()
            if not c:
                raise ZeroDivisionError("division by zero")
            return AlphaPoly(tuple(x / c for x in self.coeffs))
        q, r = divmod(self, other)
        if r:
            raise ValueError("inexact polynomial division: %s by %s" % (self, other))
        return q

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return AlphaPoly(tuple(c / other for c in self.coeffs))
        if isinstance(other, AlphaPoly):
            return self.exact_div(other)
        return NotImplemented

    # -- evaluation and display ---------------------------------------------

    def subs(self, value):
        """Evaluate at a rational alpha by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    __call__ = subs

    def content_primitive(self):
        """Split into (sign, content, primitive integer coefficients).

        ``self == sign * content * AlphaPoly(primitive)`` with ``content`` a
        positive Fraction and ``primitive`` integer coefficients of gcd 1 and
        positive leading entry.  The zero polynomial maps to (1, 0, ()).
        """
        if not self.coeffs:
            return 1, Fraction(0), ()
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, abs(v))
        sign = 1 if ints[-1] > 0 else -1
        prim = tuple(sign * v // g for v in ints)
        return sign, Fraction(g, den), prim

    def render(self, symbol="a"):
        """Human-readable form, descending powers: e.g. ``a^2+3a+4``."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = symbol if k == 1 else "%s^%d" % (symbol, k)
                body = var if mag == 1 else "%s%s" % (mag, var)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("-" if c < 0 else "+") + body)
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "AlphaPoly(%r)" % (list(self.coeffs),)


#: The variable itself: alpha as a degree-one polynomial.
ALPHA = AlphaPoly((0, 1))


def alpha_shifted(offset):
    """alpha + offset as an AlphaPoly."""
    return AlphaPoly((Fraction(offset), Fraction(1)))


def interpolate_alpha(xs, ys):
    """Exact Lagrange interpolation through (xs[t], ys[t]) as an AlphaPoly.

    Uses Newton's divided differences; all arithmetic is over Fractions so the
    result is the unique interpolating polynomial of degree < len(xs).
    """
    if len(xs) != len(ys) or not xs:
        raise ValueError("need equally many sample points and values")
    xs = [Fraction(x) for x in xs]
    dd = [Fraction(y) for y in ys]
    m = len(xs)
    for level in range(1, m):
        for t in range(m - 1, level - 1, -1):
            dd[t] = (dd[t] - dd[t - 1]) / (xs[t] - xs[t - level])
    # Horner assembly: P = dd[m-1]; P = P*(a - x_t) + dd[t]
    poly = AlphaPoly((dd[m - 1],))
    for t in range(m - 2, -1, -1):
        poly = poly * AlphaPoly((-xs[t], 1)) + dd[t]
    return poly
