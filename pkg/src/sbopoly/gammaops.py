"""Rising factorials, terminating hypergeometric sums, and Hankel determinants.

Everything here is exact.  Scalars are either ``fractions.Fraction`` or
``AlphaPoly`` (polynomials in the symbolic weight exponent), and every closed
form is written division-free so that it stays inside those rings.  Quantities
that would normally carry a Gamma-function prefactor are kept "reduced": the
transcendental factor is divided out once and for all, and only the rational
(or polynomial) part is computed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .alphapoly import AlphaPoly


class PoleError(ArithmeticError):
    """A reduced Gamma-function expression hit a pole (division by zero)."""


def binomial(n, k):
    """Binomial coefficient, zero outside the triangle."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


factorial = math.factorial


def pochhammer(base, r):
    """Rising factorial base*(base+1)*...*(base+r-1); empty product is 1.

    ``base`` may be an int, Fraction or AlphaPoly; the result has the same
    scalar type (ints are promoted to Fraction).
    """
    if r < 0:
        raise ValueError("rising factorial needs a non-negative length")
    if isinstance(base, AlphaPoly):
        acc = AlphaPoly((1,))
    else:
        base = Fraction(base)
        acc = Fraction(1)
    for t in range(r):
        acc = acc * (base + t)
    return acc


def gamma_ratio(base, num_shift, den_shift):
    """Reduced ratio of Gamma values at base+num_shift over base+den_shift.

    Both shifts are integers, so the ratio is a finite product (or the exact
    reciprocal of one).  Raises PoleError when the reciprocal case divides by
    zero, and ValueError for a symbolic base whose reciprocal would leave the
    polynomial ring.
    """
    if num_shift >= den_shift:
        return pochhammer(base + den_shift, num_shift - den_shift)
    prod = pochhammer(base + num_shift, den_shift - num_shift)
    if isinstance(prod, AlphaPoly):
        if not prod:
            raise PoleError("Gamma ratio pole at symbolic base %s" % (base,))
        return AlphaPoly((1,)).exact_div(prod)
    if not prod:
        raise PoleError("Gamma ratio pole at base %s" % (base,))
    return 1 / prod


def pochhammer_difference_sum(j, k, c):
    """Alternating k-th difference of l -> (c+l)_j, summed over l=0..k."""
    total = None
    for ell in range(k + 1):
        term = (-1) ** (k - ell) * binomial(k, ell) * pochhammer(c + ell, j)
        total = term if total is None else total + term
    return total


def pochhammer_difference_closed(j, k, c):
    """Closed form of the alternating difference sum: k! C(j,k) (c+k)_(j-k)."""
    if j < k:
        return pochhammer(c, 0) * 0
    return math.factorial(k) * binomial(j, k) * pochhammer(c + k, j - k)


def hyp2f1_terminating(m, b, c, x):
    """Terminating Gauss series F(-m, b; c; x) over Fractions.

    Raises PoleError if a lower-parameter zero is reached while the series is
    still producing non-zero terms.
    """
    if m < 0:
        raise ValueError("terminating series needs non-negative degree")
    b, c, x = Fraction(b), Fraction(c), Fraction(x)
    total = Fraction(0)
    num = Fraction(1)  # (-m)_q (b)_q x^q / q!
    den = Fraction(1)  # (c)_q
    for q in range(m + 1):
        if not num:
            break
        if not den:
            raise PoleError("lower parameter pole in terminating series")
        total += num / den
        num *= Fraction(q - m) * (b + q) * x / (q + 1)
        den *= c + q
    return total


def pochhammer_hyp2f1(m, b, c, x):
    """Division-free (c)_m F(-m, b; c; x): safe at lower-parameter poles.

    Equals sum over q of (-1)^q C(m,q) (b)_q (c+q)_(m-q) x^q, a polynomial
    identity in b and c, so AlphaPoly parameters are welcome.
    """
    x = Fraction(x)
    total = None
    for q in range(m + 1):
        coeff = (-1) ** q * binomial(m, q) * x**q
        term = coeff * pochhammer(b, q) * pochhammer(c + q, m - q)
        total = term if total is None else total + term
    return total


# ---------------------------------------------------------------------------
# Two-variable terminating hypergeometric sums.
#
# The three routes below compute the same quantity three structurally
# different ways; their agreement is one of the identities the verification
# suite checks.  The "scaled" versions multiply through by (c)_j (c)_k so the
# value is a polynomial in c, which keeps symbolic parameters exact.
# ---------------------------------------------------------------------------


def two_var_hyper_sum(j, k, c, z, w):
    """Single-sum route: sum over p of the diagonal product terms.

    Value is Gamma(c) * S(j,k,c;z,w) in the reduced convention, i.e. the
    Gamma(c) prefactor is already divided out.  Defined for every rational z
    and w (no singular argument transform involved).
    """
    c, z, w = Fraction(c), Fraction(z), Fraction(w)
    total = Fraction(0)
    for p in range(min(j, k) + 1):
        den = pochhammer(c, p)
        coeff = binomial(j, p) * binomial(k, p) * math.factorial(p)
        num = coeff * (z * w) ** p * (1 + z) ** (j - p) * (1 + w) ** (k - p)
        if not den:
            if num:
                raise PoleError("pole in two-variable sum at p=%d" % p)
            continue
        total += num / den
    return total


def two_var_hyper_sum_double(j, k, c, z, w):
    """Double-sum route: the full rectangular sum over p and q."""
    c, z, w = Fraction(c), Fraction(z), Fraction(w)
    total = Fraction(0)
    for p in range(j + 1):
        for q in range(k + 1):
            den = pochhammer(c, p) * pochhammer(c, q)
            num = (
                binomial(j, p)
                * binomial(k, q)
                * pochhammer(c, p + q)
                * z**p
                * w**q
            )
            if not den:
                if num:
                    raise PoleError("pole in two-variable double sum")
                continue
            total += num / den
    return total


def two_var_hyper_sum_gauss(j, k, c, z, w):
    """Hypergeometric route: prefactor times a terminating Gauss series.

    Undefined when 1+z or 1+w vanishes (the argument transform degenerates);
    use the single-sum route there.
    """
    c, z, w = Fraction(c), Fraction(z), Fraction(w)
    if 1 + z == 0 or 1 + w == 0:
        raise ValueError("argument transform degenerates at z=-1 or w=-1")
    arg = z * w / ((1 + z) * (1 + w))
    return (1 + z) ** j * (1 + w) ** k * hyp2f1_terminating(j, -k, c, arg)


def two_var_hyper_sum_scaled(j, k, c, z, w):
    """Single-sum route scaled by (c)_j (c)_k: polynomial in c, pole-free."""
    z, w = Fraction(z), Fraction(w)
    total = None
    for p in range(min(j, k) + 1):
        coeff = (
            binomial(j, p)
            * binomial(k, p)
            * math.factorial(p)
            * (z * w) ** p
            * (1 + z) ** (j - p)
            * (1 + w) ** (k - p)
        )
        term = (
            coeff
            * pochhammer(c, p)
            * pochhammer(c + p, j - p)
            * pochhammer(c + p, k - p)
        )
        total = term if total is None else total + term
    return total


def two_var_hyper_sum_scaled_double(j, k, c, z, w):
    """Double-sum route scaled by (c)_j (c)_k: polynomial in c, pole-free."""
    z, w = Fraction(z), Fraction(w)
    total = None
    for p in range(j + 1):
        zp = z**p
        for q in range(k + 1):
            coeff = binomial(j, p) * binomial(k, q) * zp * w**q
            term = (
                coeff
                * pochhammer(c, p + q)
                * pochhammer(c + p, j - p)
                * pochhammer(c + q, k - q)
            )
            total = term if total is None else total + term
    return total


@dataclass
class TwoVarHyperSum:
    """All available routes to one two-variable sum, for cross-checking."""

    j: int
    k: int
    c: Fraction
    z: Fraction
    w: Fraction
    via_single_sum: Fraction
    via_double_sum: Fraction
    via_gauss_series: Fraction | None

    @property
    def agree(self):
        if self.via_single_sum != self.via_double_sum:
            return False
        if self.via_gauss_series is None:
            return True
        return self.via_gauss_series == self.via_single_sum

    @property
    def value(self):
        return self.via_single_sum


def two_var_hyper_sum_all_routes(j, k, c, z, w):
    """Evaluate every applicable route and package them for comparison."""
    c, z, w = Fraction(c), Fraction(z), Fraction(w)
    try:
        gauss = two_var_hyper_sum_gauss(j, k, c, z, w)
    except ValueError:
        gauss = None
    return TwoVarHyperSum(
        j=j,
        k=k,
        c=c,
        z=z,
        w=w,
        via_single_sum=two_var_hyper_sum(j, k, c, z, w),
        via_double_sum=two_var_hyper_sum_double(j, k, c, z, w),
        via_gauss_series=gauss,
    )


# ---------------------------------------------------------------------------
# Hankel-type determinants of rising factorials.
# ---------------------------------------------------------------------------


def gamma_hankel_matrix(c, n):
    """The n x n matrix with entry (c)_(j+k) at row j, column k."""
    return [[pochhammer(c, jj + kk) for kk in range(n)] for jj in range(n)]


def gamma_hankel_det(c, n):
    """Closed form for det[(c)_(j+k)]: product of j! (c)_j over j < n."""
    total = pochhammer(c, 0)
    for jj in range(n):
        total = total * (math.factorial(jj) * pochhammer(c, jj))
    return total


def gamma_hankel_lastrow_det(c, last_row):
    """Closed form with the last row replaced by arbitrary entries.

    ``last_row`` holds the replaced entries (same reduced convention as the
    rising-factorial rows).  Division-free: the alternating sum uses the
    complementary rising factorial rather than dividing by (c)_l.
    """
    n = len(last_row)
    alt = None
    for ell in range(n):
        term = (
            (-1) ** (n - 1 - ell)
            * binomial(n - 1, ell)
            * pochhammer(c + ell, n - 1 - ell)
            * last_row[ell]
        )
        alt = term if alt is None else alt + term
    total = alt
    for jj in range(n - 1):
        total = total * (math.factorial(jj) * pochhammer(c, jj))
    return total


def _entry_div(num, den):
    """Exact division in whichever scalar ring the entries live in."""
    if isinstance(num, AlphaPoly) or isinstance(den, AlphaPoly):
        if not isinstance(num, AlphaPoly):
            num = AlphaPoly((Fraction(num),))
        return num.exact_div(den)
    return Fraction(num) / Fraction(den)


def bareiss_det(matrix):
    """Fraction-free Bareiss determinant; exact over Fractions or AlphaPoly.

    Only exact divisions occur (Sylvester's identity guarantees them), so the
    computation stays inside the entry ring even for polynomial entries.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("square matrix required")
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = 1
    for r in range(n - 1):
        if not m[r][r]:
            for rr in range(r + 1, n):
                if m[rr][r]:
                    m[r], m[rr] = m[rr], m[r]
                    sign = -sign
                    break
            else:
                zero = m[r][r]
                return zero * 0 if isinstance(zero, AlphaPoly) else Fraction(0)
        for rr in range(r + 1, n):
            for cc in range(r + 1, n):
                val = m[rr][cc] * m[r][r] - m[rr][r] * m[r][cc]
                m[rr][cc] = _entry_div(val, prev)
            m[rr][r] = m[rr][r] * 0
        prev = m[r][r]
    result = m[n - 1][n - 1]
    if sign < 0:
        result = -result
    return result
