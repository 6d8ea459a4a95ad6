"""Dense univariate polynomials in x over exact scalars.

Coefficients are Fractions or AlphaPoly elements (polynomials in the symbolic
Laguerre weight exponent); the two kinds mix freely in arithmetic, with plain
rationals treated as constants.  Everything is immutable and exact.
"""

from __future__ import annotations

from fractions import Fraction

from .alphapoly import AlphaPoly, fraction_sqrt

EVEN = "even"
ODD = "odd"
MIXED = "none"


class IrrationalScaleError(ValueError):
    """Argument rescaling would need an irrational coefficient factor."""


def _is_scalar(value):
    return isinstance(value, (int, Fraction, AlphaPoly))


def _coerce_scalar(value):
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, (Fraction, AlphaPoly)):
        return value
    raise TypeError("not a supported coefficient: %r" % (value,))


class Poly:
    """Polynomial in x, ascending dense coefficients, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- structure -----------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def leading(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, k):
        """Coefficient of x^k (zero above the degree)."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    @property
    def has_alpha(self):
        return any(isinstance(c, AlphaPoly) for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            if len(self.coeffs) != len(other.coeffs):
                return False
            return all(a == b for a, b in zip(self.coeffs, other.coeffs))
        if _is_scalar(other):
            if not self.coeffs:
                return not other
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        if _is_scalar(other):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if _is_scalar(other):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            other = _coerce_scalar(other)
            return Poly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for j, x in enumerate(a):
            if not x:
                continue
            for k, y in enumerate(b):
                out[j + k] = out[j + k] + x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("non-negative integer power required")
        result = Poly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if _is_scalar(other):
            other = _coerce_scalar(other)
            return Poly(tuple(_scalar_div(c, other) for c in self.coeffs))
        return NotImplemented

    # -- calculus and evaluation ----------------------------------------------

    def derivative(self):
        return Poly(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def __call__(self, x):
        """Horner evaluation at a rational (or scalar) point."""
        x = _coerce_scalar(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x):
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + _scalar_float(c)
        return acc

    def subs_alpha(self, alpha0):
        """Substitute a numeric value for the symbolic weight exponent."""
        alpha0 = Fraction(alpha0)
        out = []
        for c in self.coeffs:
            out.append(c.subs(alpha0) if isinstance(c, AlphaPoly) else c)
        return Poly(out)

    # -- structural transforms -------------------------------------------------

    def compose_x_squared(self):
        """p(x^2): spread coefficients onto even powers."""
        out = []
        for c in self.coeffs:
            out.append(c)
            out.append(Fraction(0))
        return Poly(out[:-1] if out else out)

    def times_x(self, power=1):
        if not self.coeffs:
            return self
        return Poly((Fraction(0),) * power + self.coeffs)

    def scale_x(self, c):
        """p(c*x): multiply the k-th coefficient by c^k."""
        c = Fraction(c)
        return Poly(tuple(coef * c**k for k, coef in enumerate(self.coeffs)))

    def parity(self):
        if all(not c for k, c in enumerate(self.coeffs) if k % 2):
            return EVEN
        if all(not c for k, c in enumerate(self.coeffs) if k % 2 == 0):
            return ODD
        return MIXED

    def __repr__(self):
        return "Poly(%r)" % (list(self.coeffs),)


def _scalar_div(value, divisor):
    if isinstance(value, AlphaPoly) or isinstance(divisor, AlphaPoly):
        if not isinstance(value, AlphaPoly):
            value = AlphaPoly((value,))
        return value.exact_div(divisor)
    return value / divisor


def _scalar_float(value):
    if isinstance(value, AlphaPoly):
        return float(value.constant_value())
    return float(value)


X = Poly((0, 1))
ONE = Poly((1,))


def monomial(n, coeff=1):
    return Poly((Fraction(0),) * n + (_coerce_scalar(coeff),))


def scale_arg_monic(p, c, mode):
    """Rescale the argument of a monic polynomial, keeping it monic.

    sqrt mode sends p(x) to c^(-n/2) p(sqrt(c) x): the k-th coefficient picks
    up c^((k-n)/2), which is rational only when n-k is even (fixed-parity
    polynomials) or c is a perfect rational square.  linear mode sends p(x)
    to c^(-n) p(c x), always rational.
    """
    c = Fraction(c)
    if c <= 0:
        raise ValueError("positive scale required")
    if not p.is_monic:
        raise ValueError("monic polynomial required")
    n = p.degree
    if mode == "linear":
        return Poly(tuple(coef * c ** (k - n) for k, coef in enumerate(p.coeffs)))
    if mode != "sqrt":
        raise ValueError("mode must be 'sqrt' or 'linear'")
    root = fraction_sqrt(c)
    out = []
    for k, coef in enumerate(p.coeffs):
        if not coef:
            out.append(coef)
            continue
        gap = n - k
        if gap % 2 == 0:
            out.append(coef * c ** (-(gap // 2)))
        elif root is not None:
            out.append(coef * root ** (k - n))
        else:
            raise IrrationalScaleError(
                "sqrt-mode rescale of an odd-gap coefficient needs a square scale"
            )
    return Poly(out)


# ---------------------------------------------------------------------------
# Rendering.
# ---------------------------------------------------------------------------


def _alpha_coeff_str(c, symbol):
    """Render an AlphaPoly coefficient like (3a+5)/2 or 3(a+5)/2."""
    sign, content, prim = c.content_primitive()
    num, den = content.numerator, content.denominator
    if len(prim) <= 1:
        text = str(Fraction(num, den))
    else:
        text = "(%s)" % AlphaPoly(prim).render(symbol)
        if num != 1:
            text = "%d%s" % (num, text)
        if den != 1:
            text += "/%d" % den
    return ("-" if sign < 0 else "") + text


def scalar_str(c, alpha_symbol="a"):
    """One scalar as display text: '1/8', '(a^2+3a+2)/4', '3(a+5)/2'."""
    if isinstance(c, AlphaPoly) and not c.is_constant:
        text = _alpha_coeff_str(c, alpha_symbol)
        if text.startswith("(") and text.endswith(")"):
            inner = text[1:-1]
            if "(" not in inner and ")" not in inner:
                return inner
        return text
    value = c.constant_value() if isinstance(c, AlphaPoly) else c
    return str(value)


def _coeff_strings(c, symbol):
    """Return (sign, magnitude-string, is_plain_one) for one coefficient."""
    if isinstance(c, AlphaPoly) and not c.is_constant:
        text = _alpha_coeff_str(c, symbol)
        if text.startswith("-"):
            return "-", text[1:], False
        return "+", text, False
    value = c.constant_value() if isinstance(c, AlphaPoly) else c
    sign = "-" if value < 0 else "+"
    mag = abs(value)
    return sign, str(mag), mag == 1


def pretty(p, var="x", alpha_symbol="a"):
    """Plain-text rendering, descending powers: 'x^4 - 7/4 x^2 + 1/8'."""
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if not c:
            continue
        sign, mag, is_one = _coeff_strings(c, alpha_symbol)
        if k == 0:
            body = mag
        else:
            xpart = var if k == 1 else "%s^%d" % (var, k)
            body = xpart if is_one else "%s %s" % (mag, xpart)
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append("%s %s" % (sign, body))
    return " ".join(parts)


def _latex_fraction(q):
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return r"%s\frac{%d}{%d}" % (sign, abs(q.numerator), q.denominator)


def _latex_alpha(c):
    sign, content, prim = c.content_primitive()
    num, den = content.numerator, content.denominator
    if len(prim) <= 1:
        text = _latex_fraction(Fraction(num, den))
    else:
        text = r"\left(%s\right)" % AlphaPoly(prim).render("\\alpha")
        if num != 1 or den != 1:
            text = _latex_fraction(Fraction(num, den)) + text
    return ("-" if sign < 0 else "") + text


def latex(p, var="x"):
    """LaTeX rendering with descending powers and explicit sign chain."""
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if not c:
            continue
        if isinstance(c, AlphaPoly) and not c.is_constant:
            text = _latex_alpha(c)
            sign = "-" if text.startswith("-") else "+"
            mag = text.lstrip("-")
            is_one = False
        else:
            value = c.constant_value() if isinstance(c, AlphaPoly) else c
            sign = "-" if value < 0 else "+"
            mag = _latex_fraction(abs(value))
            is_one = abs(value) == 1
        if k == 0:
            body = mag
        else:
            xpart = var if k == 1 else "%s^{%d}" % (var, k)
            body = xpart if is_one else "%s\\,%s" % (mag, xpart)
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append("%s %s" % (sign, body))
    return " ".join(parts)
