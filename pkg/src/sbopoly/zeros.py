"""Exact real-zero isolation and float refinement for rational polynomials.

Root counting is done with Sturm chains over the rationals on the
square-free part, so the number of distinct real zeros, their simplicity,
and sign statements (all zeros nonnegative, zero at the origin) are exact.
Isolating intervals are bisected — splitting at the origin first when an
interval straddles it — down to width 2^-53, then polished with a few float
Newton steps for a plain-float view.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly

WIDTH_TARGET = Fraction(1, 2**53)


def poly_divmod(a, b):
    """Quotient and remainder of dense rational polynomials."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = Poly()
    rem = a
    inv_lead = Fraction(1) / b.leading
    while rem and rem.degree >= b.degree:
        shift = rem.degree - b.degree
        factor = rem.leading * inv_lead
        term = Poly((0,) * shift + (factor,))
        quot = quot + term
        rem = rem - term * b
    return quot, rem


def poly_gcd(a, b):
    """Monic greatest common divisor over the rationals."""
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return a
    return a / a.leading


def square_free_part(p):
    """p with repeated factors collapsed to single ones, made monic."""
    if p.degree <= 0:
        raise ValueError("need a nonconstant polynomial")
    g = poly_gcd(p, p.derivative())
    reduced = poly_divmod(p, g)[0] if g.degree > 0 else p
    return reduced / reduced.leading


def _strip_content(p):
    """Scale to integer coefficients with no common factor (sign kept)."""
    if not p:
        return p
    denom = 1
    for c in p.coeffs:
        denom = denom * c.denominator // _gcd(denom, c.denominator)
    scaled = [c * denom for c in p.coeffs]
    g = 0
    for c in scaled:
        g = _gcd(g, abs(c.numerator))
    return Poly(tuple(Fraction(c.numerator // g) for c in scaled))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def sturm_chain(p):
    """Sturm chain of a square-free polynomial, content-normalized."""
    chain = [_strip_content(p), _strip_content(p.derivative())]
    while chain[-1]:
        rem = poly_divmod(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append(_strip_content(-rem))
    return chain


def _sign(value):
    return (value > 0) - (value < 0)


def sign_variations(chain, x):
    signs = [s for s in (_sign(q(x)) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at_infinity(chain, positive):
    signs = []
    for q in chain:
        if not q:
            continue
        s = _sign(q.leading)
        if not positive and q.degree % 2:
            s = -s
        signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def real_root_count(p):
    """Number of distinct real zeros, exactly."""
    if p.degree <= 0:
        return 0
    chain = sturm_chain(square_free_part(p))
    return (_variations_at_infinity(chain, False)
            - _variations_at_infinity(chain, True))


def negative_root_count(p):
    """Number of distinct real zeros strictly below the origin, exactly."""
    if p.degree <= 0:
        return 0
    sf = square_free_part(p)
    if sf(Fraction(0)) == 0:
        sf = poly_divmod(sf, Poly((0, 1)))[0]
    chain = sturm_chain(sf)
    return (_variations_at_infinity(chain, False)
            - sign_variations(chain, Fraction(0)))


def cauchy_bound(p):
    """All complex zeros have absolute value below this rational bound."""
    lead = abs(p.leading)
    largest = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    return Fraction(1) + largest / lead


def _nonzero_near(p, x, step):
    """A point near x where p does not vanish, stepping away by halves."""
    while p(x) == 0:
        x = x + step
        step = step / 2
    return x


def isolate_real_roots(p):
    """Disjoint rational intervals, one per distinct real zero of p.

    Works on the square-free part; an exact rational zero comes back as a
    degenerate [r, r] interval.  Intervals are returned sorted.
    """
    sf = square_free_part(p)
    chain = sturm_chain(sf)
    bound = cauchy_bound(sf)
    out = []

    def explore(lo, hi, v_lo, v_hi):
        count = v_lo - v_hi
        if count == 0:
            return
        if count == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if sf(mid) == 0:
            # shrink the punctured gap until it holds no zero besides mid
            width = (hi - lo) / 8
            while True:
                left = _nonzero_near(sf, mid - width, -width / 2)
                right = _nonzero_near(sf, mid + width, width / 2)
                v_left = sign_variations(chain, left)
                v_right = sign_variations(chain, right)
                if v_left - v_right == 1:
                    break
                width = width / 2
            out.append((mid, mid))
            explore(lo, left, v_lo, v_left)
            explore(right, hi, v_right, v_hi)
        else:
            v_mid = sign_variations(chain, mid)
            explore(lo, mid, v_lo, v_mid)
            explore(mid, hi, v_mid, v_hi)

    lo = _nonzero_near(sf, -bound, -Fraction(1, 2))
    hi = _nonzero_near(sf, bound, Fraction(1, 2))
    explore(lo, hi, sign_variations(chain, lo), sign_variations(chain, hi))
    return sorted(out), sf


def refine_interval(sf, lo, hi, width=WIDTH_TARGET):
    """Shrink a sign-change interval of the square-free part below `width`,
    splitting at the origin first so interval signs are decisive."""
    if lo == hi:
        return lo, hi
    if lo < 0 < hi:
        if sf(0) == 0:
            return Fraction(0), Fraction(0)
        if _sign(sf(lo)) != _sign(sf(0)):
            hi = Fraction(0)
        else:
            lo = Fraction(0)
    s_lo = _sign(sf(lo))
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = _sign(sf(mid))
        if s_mid == 0:
            return mid, mid
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _newton_polish(p, guess, lo, hi):
    coeffs = [float(c) for c in p.coeffs]
    deriv = [k * c for k, c in enumerate(coeffs)][1:]

    def horner(cs, x):
        acc = 0.0
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    x = guess
    for _ in range(8):
        d = horner(deriv, x)
        if d == 0:
            break
        step = horner(coeffs, x) / d
        nxt = x - step
        if not lo <= nxt <= hi:
            break
        x = nxt
        if abs(step) <= 1e-16 * max(1.0, abs(x)):
            break
    return x


@dataclass(frozen=True)
class RootReport:
    """Exact zero structure of one rational polynomial.

    real_root_count counts distinct real zeros; all_simple says no zero
    (real or complex) is repeated; intervals are the exact isolating
    intervals of the real zeros; roots are their float refinements.
    """

    degree: int
    real_root_count: int
    all_simple: bool
    all_nonnegative: bool
    intervals: tuple
    roots: tuple

    def relative_residuals(self, p):
        """|p(root)| for each float root, over the largest |coefficient|."""
        scale = max(abs(float(c)) for c in p.coeffs)
        return [abs(p.eval_float(r)) / scale for r in self.roots]


def root_report(p):
    """Isolate, refine, and polish every real zero of p."""
    if p.has_alpha:
        raise TypeError("zero isolation needs numeric coefficients")
    if p.degree <= 0:
        return RootReport(p.degree, 0, True, True, (), ())
    g = poly_gcd(p, p.derivative())
    intervals_raw, sf = isolate_real_roots(p)
    intervals = tuple(refine_interval(sf, lo, hi) for lo, hi in intervals_raw)
    roots = []
    for lo, hi in intervals:
        if lo == hi:
            roots.append(float(lo))
        else:
            guard = float(hi - lo)
            roots.append(_newton_polish(p, float((lo + hi) / 2),
                                        float(lo) - guard, float(hi) + guard))
    return RootReport(
        degree=p.degree,
        real_root_count=len(intervals),
        all_simple=g.degree == 0,
        all_nonnegative=all(lo >= 0 for lo, _ in intervals),
        intervals=intervals,
        roots=tuple(roots),
    )


def interlaces(lower, upper):
    """Strict interlacing of the real zeros of `lower` between those of
    `upper`: no shared zeros, every zero of `lower` strictly inside the
    open hull of the zeros of `upper`, and at most one zero of `lower` in
    each open gap between consecutive zeros of `upper`.
    """
    if poly_gcd(lower, upper).degree > 0:
        return False
    low_iv, low_sf = isolate_real_roots(lower)
    up_iv, up_sf = isolate_real_roots(upper)
    if not low_iv or len(up_iv) < 2:
        return False
    low_iv = [refine_interval(low_sf, lo, hi) for lo, hi in low_iv]
    up_iv = [refine_interval(up_sf, lo, hi) for lo, hi in up_iv]

    width = WIDTH_TARGET
    while True:
        merged = sorted([(iv, 0) for iv in low_iv] + [(iv, 1) for iv in up_iv],
                        key=lambda item: item[0])
        overlap = any(a[0][1] > b[0][0] for a, b in zip(merged, merged[1:]))
        if not overlap:
            break
        width = width / 2**8
        low_iv = [refine_interval(low_sf, lo, hi, width) for lo, hi in low_iv]
        up_iv = [refine_interval(up_sf, lo, hi, width) for lo, hi in up_iv]

    # positions of the lower zeros relative to the upper ones; intervals are
    # disjoint but may share an endpoint, and an endpoint is never a zero of
    # the other polynomial, so a touching interval is decisively below
    gap_counts = [0] * (len(up_iv) + 1)
    for lo, hi in low_iv:
        slot = 0
        for up_lo, up_hi in up_iv:
            if up_hi <= lo:
                slot += 1
        gap_counts[slot] += 1
    if gap_counts[0] or gap_counts[-1]:
        return False
    return all(count <= 1 for count in gap_counts[1:-1])
