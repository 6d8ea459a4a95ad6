"""Named verification suites gathering every module's exact checks.

Each suite function returns a list of Check rows in a fixed, deterministic
order: same build, same rows, same bytes.  The zero-structure suite can
raise RealnessCounterexample instead of returning, when the observed
real-zero pattern (which nothing proves) actually breaks; the exception
carries a machine-readable dump of the offending member.
"""

from __future__ import annotations

from fractions import Fraction

from . import (classical, gammaops, hermite_sbo, laguerre_sbo, measures,
               oracle, serialize, zeros)
from .alphapoly import ALPHA, AlphaPoly, interpolate_alpha
from .gammaops import (bareiss_det, gamma_hankel_det, gamma_hankel_lastrow_det,
                       gamma_hankel_matrix, pochhammer, pochhammer_hyp2f1)
import math

from .poly import Poly, monomial
from .reporting import (EXPECTED_NEGATIVE, FAIL, Check,
                        RealnessCounterexample, check)

HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# Exact-arithmetic kernel.
# ---------------------------------------------------------------------------


def _det_by_cofactors(m):
    if len(m) == 1:
        return m[0][0]
    total = None
    for col in range(len(m)):
        minor = [row[:col] + row[col + 1:] for row in m[1:]]
        term = (-1) ** col * m[0][col] * _det_by_cofactors(minor)
        total = term if total is None else total + term
    return total


def exact_kernel_checks(det_max=8):
    """Invariants of the rising-factorial / hypergeometric / determinant
    layer, rational and symbolic."""
    out = []

    bases = [Fraction(1, 2), Fraction(3, 2), Fraction(-5, 2), Fraction(7, 3),
             ALPHA + 1]
    ok = all(pochhammer(c, m + n) == pochhammer(c, m) * pochhammer(c + m, n)
             for c in bases for m in range(5) for n in range(5))
    out.append(check("rising factorial splits multiplicatively", ok))

    ok = True
    for c in (Fraction(1, 2), Fraction(7, 3)):
        for a in range(-2, 4):
            for b in range(-2, 4):
                fwd = gammaops.gamma_ratio(c, a, b)
                ok = ok and fwd * gammaops.gamma_ratio(c, b, a) == 1
    out.append(check("reduced gamma ratios invert pairwise", ok))

    try:
        gammaops.gamma_ratio(Fraction(0), 0, 2)
        ok = False
    except gammaops.PoleError:
        ok = True
    out.append(check("reduced gamma ratio reports its poles", ok))

    ok = all(gammaops.pochhammer_difference_sum(j, k, c)
             == gammaops.pochhammer_difference_closed(j, k, c)
             for c in bases for j in range(8) for k in range(8))
    out.append(check("alternating difference of rising factorials collapses",
                     ok))

    ok = True
    for m in range(7):
        for b in (Fraction(1, 3), Fraction(5, 2), Fraction(-3, 2)):
            for c in (Fraction(1, 2), Fraction(13, 4)):
                lhs = (gammaops.hyp2f1_terminating(m, b, c, 1)
                       * pochhammer(c, m))
                if lhs != pochhammer(c - b, m):
                    ok = False
    out.append(check("terminating series at unit argument sums in closed form",
                     ok))

    ok = all(pochhammer_hyp2f1(m, b, c, 1) == pochhammer(c - b, m)
             for m in range(7)
             for b in (ALPHA, 2 * ALPHA + 3)
             for c in (ALPHA + 1, ALPHA + Fraction(5, 2)))
    out.append(check("division-free unit-argument sum works symbolically", ok))

    ok = True
    for m in range(6):
        for x in (Fraction(2), Fraction(-1, 3)):
            direct = (gammaops.hyp2f1_terminating(m, Fraction(5, 2),
                                                  Fraction(3, 4), x)
                      * pochhammer(Fraction(3, 4), m))
            if direct != pochhammer_hyp2f1(m, Fraction(5, 2),
                                           Fraction(3, 4), x):
                ok = False
    out.append(check("division-free series matches the plain series", ok))

    args = [(-HALF, -HALF), (-Fraction(1, 3), -HALF), (Fraction(1), Fraction(2)),
            (Fraction(-1), -HALF)]
    ok = True
    for j in range(6):
        for k in range(6):
            for c in (HALF, Fraction(3, 2)):
                for z, w in args:
                    if not gammaops.two_var_hyper_sum_all_routes(
                            j, k, c, z, w).agree:
                        ok = False
    out.append(check("two-variable sum routes agree", ok))

    ok = True
    for j in range(6):
        for k in range(6):
            for c in (HALF, Fraction(3, 2), Fraction(7, 3)):
                plain = gammaops.two_var_hyper_sum(j, k, c, -HALF, -HALF)
                scaled = gammaops.two_var_hyper_sum_scaled(j, k, c,
                                                           -HALF, -HALF)
                if scaled != plain * pochhammer(c, j) * pochhammer(c, k):
                    ok = False
    out.append(check("pole-free scaling matches the plain sum", ok))

    ok = all(gammaops.two_var_hyper_sum_scaled(j, k, ALPHA + 1, -HALF, -Fraction(1, 3))
             == gammaops.two_var_hyper_sum_scaled_double(j, k, ALPHA + 1,
                                                         -HALF, -Fraction(1, 3))
             for j in range(6) for k in range(6))
    out.append(check("scaled single and double sums agree symbolically", ok))

    ok = True
    for c in (HALF, Fraction(3, 2)):
        for n in range(det_max + 1):
            closed_det = gamma_hankel_det(c, n)
            if closed_det != bareiss_det(gamma_hankel_matrix(c, n)):
                ok = False
    out.append(check("rising-factorial grid determinant has closed form", ok))

    ok = all(gamma_hankel_det(ALPHA + 1, n)
             == bareiss_det(gamma_hankel_matrix(ALPHA + 1, n))
             for n in range(min(det_max, 6) + 1))
    out.append(check("grid determinant closed form holds symbolically", ok))

    ok = True
    for c in (HALF, Fraction(3, 2)):
        for n in range(1, det_max + 1):
            for shift in (0, 1, 3):
                last = [pochhammer(c, ell + n - 1 + shift) for ell in range(n)]
                matrix = gamma_hankel_matrix(c, n)
                matrix[n - 1] = list(last)
                if (gamma_hankel_lastrow_det(c, last)
                        != bareiss_det(matrix)):
                    ok = False
            last = [Fraction(2 * ell + 1) for ell in range(n)]
            matrix = gamma_hankel_matrix(c, n)
            matrix[n - 1] = list(last)
            if gamma_hankel_lastrow_det(c, last) != bareiss_det(matrix):
                ok = False
    out.append(check("replaced-last-row determinant has closed form", ok))

    fixed = [
        [[Fraction(2)]],
        [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]],
        [[Fraction(0), Fraction(1), Fraction(2)],
         [Fraction(1), Fraction(0), Fraction(3)],
         [Fraction(4), Fraction(5), Fraction(0)]],
        [[Fraction(1, 2), Fraction(1), Fraction(0), Fraction(2)],
         [Fraction(0), Fraction(0), Fraction(3), Fraction(1)],
         [Fraction(1), Fraction(1, 3), Fraction(1), Fraction(0)],
         [Fraction(2), Fraction(0), Fraction(0), Fraction(5)]],
    ]
    ok = all(bareiss_det(m) == _det_by_cofactors(m) for m in fixed)
    out.append(check("fraction-free determinant matches cofactor expansion",
                     ok))

    target = AlphaPoly((Fraction(7), -Fraction(3, 2), Fraction(0), Fraction(1)))
    xs = [Fraction(t) for t in range(5)]
    ys = [target(x) for x in xs]
    ok = interpolate_alpha(xs, ys) == target
    out.append(check("exact interpolation reproduces a cubic", ok))

    return out


# ---------------------------------------------------------------------------
# Moments, Gram entries, generating-function kernels.
# ---------------------------------------------------------------------------


def measure_checks(order=12, z_top=7):
    out = []

    first, second = measures.hermite_pair()
    ok = all(first.integrate(monomial(j)) == first.moment(j)
             for j in range(2 * order))
    ok = ok and all(first.moment(j) == 0 for j in range(1, 2 * order, 2))
    ok = ok and all(first.inner(monomial(a), monomial(b))
                    == first.moment(a + b)
                    for a in range(order) for b in range(order))
    out.append(check("hermite moments behave as a functional", ok))

    lfirst, lsecond = measures.laguerre_pair()
    ok = all(lfirst.inner(monomial(a), monomial(b)) == lfirst.moment(a + b)
             for a in range(order) for b in range(order))
    out.append(check("laguerre moments behave as a functional", ok))

    quantity = (measures.hermite_moment(4, 4), measures.hermite_moment_unit(4))
    rescaled = (measures.hermite_moment(4, 4) / 2,
                measures.hermite_moment_unit(1))
    ok = measures.same_quantity(quantity, rescaled)
    try:
        measures.unit_ratio(measures.hermite_moment_unit(1),
                            measures.laguerre_moment_unit(1))
        ok = False
    except measures.UnitError:
        pass
    out.append(check("reduced units convert exactly and refuse nonsense", ok))

    ok = all(measures.hermite_gamma(j, k)[0] == 0
             for j in range(0, order, 2) for k in range(1, order, 2))
    out.append(check("hermite cross-parity products vanish", ok))

    ok = True
    for j in range(order + 1):
        for k in range(order + 1):
            general = measures.hermite_gamma(j, k, Fraction(2))
            collapsed = measures.hermite_gamma_mu2_closed(j, k)
            if not (general[0] == collapsed[0]
                    and general[1] == collapsed[1]):
                ok = False
    out.append(check("hermite doubled-weight products separate", ok))

    ok = True
    for j in range(min(order, 10) + 1):
        for k in range(min(order, 10) + 1):
            general = measures.laguerre_gamma(j, k, Fraction(2))
            collapsed = measures.laguerre_gamma_mu2_closed(j, k)
            if not (general[0] == collapsed[0]
                    and general[1] == collapsed[1]):
                ok = False
    out.append(check("laguerre doubled-weight products separate symbolically",
                     ok))

    ok = all(measures.hermite_gamma(j, k, Fraction(3))[0]
             == measures.hermite_gamma(k, j, Fraction(3))[0]
             for j in range(8) for k in range(8))
    ok = ok and all(measures.laguerre_gamma(j, k, Fraction(3))[0]
                    == measures.laguerre_gamma(k, j, Fraction(3))[0]
                    for j in range(6) for k in range(6))
    out.append(check("second products are symmetric", ok))

    for mu in (Fraction(2), Fraction(3)):
        table, unit = measures.hermite_gf_gamma_table(order, mu)
        ok = unit == measures.hermite_gamma(0, 0, mu)[1]
        for j in range(order + 1):
            for k in range(order + 1 - j):
                direct, _ = measures.hermite_gamma(j, k, mu)
                if j % 2:
                    # odd-odd entries carry one extra reciprocal power
                    direct = direct / mu
                if table.get((j, k), Fraction(0)) != direct:
                    ok = False
        out.append(check(
            "hermite kernel expansion matches products at mu=%s" % mu, ok))

    for mu in (Fraction(2), Fraction(3)):
        table, unit = measures.laguerre_gf_gamma_table(order, mu)
        ok = unit == measures.laguerre_gamma(0, 0, mu)[1]
        for j in range(order + 1):
            for k in range(order + 1 - j):
                direct, _ = measures.laguerre_gamma(j, k, mu)
                if table.get((j, k), AlphaPoly(())) != direct:
                    ok = False
        out.append(check(
            "laguerre kernel expansion matches products at mu=%s" % mu, ok))

    ok = True
    for parity in (0, 1):
        for i in range(z_top + 1):
            for n in range(i - 1, z_top + 1):
                closed_z = measures.hermite_z(i, n, parity)
                brute = measures.hermite_z_from_gram(i, n, parity)
                if not measures.same_quantity(closed_z, brute):
                    ok = False
    out.append(check("hermite block determinants have closed form", ok))

    ok = True
    for i in range(min(z_top, 5) + 1):
        for n in range(i - 1, min(z_top, 5) + 1):
            closed_z = measures.laguerre_z(i, n)
            brute = measures.laguerre_z_from_gram(i, n)
            if not (closed_z[0] == brute[0] and closed_z[1] == brute[1]):
                ok = False
    for a in (Fraction(0), HALF):
        for i in range(z_top + 1):
            for n in range(i - 1, z_top + 1):
                closed_z = measures.laguerre_z(i, n, a)
                brute = measures.laguerre_z_from_gram(i, n, a)
                if not (closed_z[0] == brute[0] and closed_z[1] == brute[1]):
                    ok = False
    out.append(check("laguerre block determinants have closed form", ok))

    ok = True
    for functional in (measures.MomentFunctional(measures.HERMITE, Fraction(2)),
                       measures.MomentFunctional(measures.LAGUERRE,
                                                 Fraction(2), HALF)):
        minors = measures.monomial_gram(functional, 7).leading_principal_minors()
        if any(m <= 0 for m in minors):
            ok = False
    out.append(check("moment grids are positive definite", ok))

    return out


# ---------------------------------------------------------------------------
# Zero structure.
# ---------------------------------------------------------------------------


def _realness_dump(family, i, n, alpha, p):
    record = {
        "family": family,
        "i": i,
        "n": n,
        "alpha": None if alpha is None else serialize.rational_str(alpha),
        "coeffs": [serialize.coeff_entry(c) for c in p.coeffs],
    }
    try:
        record["report"] = serialize.root_report_dict(zeros.root_report(p))
    except Exception as err:  # keep the primary finding visible
        record["report_error"] = repr(err)
    return record


def _scan_member(family, i, n, alpha, p, require_nonnegative):
    """Cheap exact screen; full isolation only if something looks wrong."""
    if p.degree <= 0:
        return
    simple = zeros.square_free_part(p).degree == p.degree
    count = zeros.real_root_count(p)
    negatives = zeros.negative_root_count(p) if require_nonnegative else 0
    if simple and count == p.degree and negatives == 0:
        return
    raise RealnessCounterexample(_realness_dump(family, i, n, alpha, p))


def zero_structure_checks(hermite_i=4, hermite_extra=6, laguerre_i=3,
                          laguerre_extra=5, interlace_n=8):
    out = []

    ok = all(zeros.real_root_count(classical.hermite_monic(n)) == n
             for n in range(1, interlace_n + 1))
    ok = ok and all(
        zeros.real_root_count(
            classical.laguerre_monic(n).subs_alpha(HALF)) == n
        for n in range(1, interlace_n + 1))
    out.append(check("classical polynomials have full real zero sets", ok))

    report = zeros.root_report(classical.hermite_monic(12))
    residual = max(report.relative_residuals(classical.hermite_monic(12)))
    out.append(check("refined zeros sit on the polynomial",
                     report.real_root_count == 12 and residual < Fraction(1, 10**9),
                     "max relative residual %.3e" % float(residual)))

    ok = all(zeros.interlaces(classical.hermite_monic(n - 1),
                              classical.hermite_monic(n))
             for n in range(2, interlace_n + 1))
    ok = ok and all(
        zeros.interlaces(classical.laguerre_monic(n - 1).subs_alpha(HALF),
                         classical.laguerre_monic(n).subs_alpha(HALF))
        for n in range(2, interlace_n + 1))
    out.append(check("classical zeros interlace in degree", ok))

    ok = not zeros.interlaces(monomial(1) - 1, (monomial(1) - 1)
                              * (monomial(1) - 3))
    out.append(check("interlacing rejects shared zeros", ok))

    # first block above the classical one, exponent zero: the famous
    # consecutive pair whose zeros fail to interlace
    low = laguerre_sbo.closed(1, 2).subs_alpha(Fraction(0))
    high = laguerre_sbo.closed(1, 3).subs_alpha(Fraction(0))
    low_report = zeros.root_report(low)
    high_report = zeros.root_report(high)
    want_low = [(5 - math.sqrt(17)) / 4, (5 + math.sqrt(17)) / 4]
    want_high = [2 - math.sqrt(3), 1.0, 2 + math.sqrt(3)]
    ok = (all(abs(g - w) < 1e-9 for g, w in zip(sorted(low_report.roots),
                                                want_low))
          and all(abs(g - w) < 1e-9 for g, w in zip(sorted(high_report.roots),
                                                    want_high)))
    out.append(check("benchmark block zeros match their radical values", ok))

    broken = not zeros.interlaces(low, high)
    out.append(Check("block zeros are allowed to not interlace",
                     EXPECTED_NEGATIVE if broken else FAIL))

    ok = True
    for i in range(hermite_i + 1):
        for n in range(i, i + hermite_extra + 1):
            p = hermite_sbo.closed(i, n)
            _scan_member("hermite-sbo", i, n, None, p, False)
            if 0 < p.degree and zeros.real_root_count(p) < i:
                ok = False
    out.append(check(
        "hermite block zeros: all real and simple on the scan grid", ok))

    ok = True
    for a in (-HALF, Fraction(0), HALF, Fraction(3, 2)):
        for i in range(laguerre_i + 1):
            for n in range(i, i + laguerre_extra + 1):
                p = laguerre_sbo.closed(i, n).subs_alpha(a)
                _scan_member("laguerre-sbo", i, n, a, p, True)
                if 0 < p.degree and zeros.real_root_count(p) < i:
                    ok = False
    out.append(check(
        "laguerre block zeros: all real, simple, nonnegative on the scan grid",
        ok))

    ok = True
    for n in range(1, hermite_i + hermite_extra + 1):
        p = hermite_sbo.closed(n - 1, n)
        if zeros.real_root_count(p) != n:
            ok = False
    out.append(check("subdiagonal members keep a full real zero set", ok))

    return out


# ---------------------------------------------------------------------------
# Suite registry.
# ---------------------------------------------------------------------------


def exact_suite(i_max=None, extra=None):
    return exact_kernel_checks(det_max=extra or 8)

def classical_suite(i_max=None, extra=None):
    hermite_n = extra or 12
    return (classical.hermite_identity_checks(hermite_n)
            + classical.laguerre_identity_checks(min(hermite_n, 10)))

def measures_suite(i_max=None, extra=None):
    return measure_checks(order=extra or 12)

def sbo_hermite_suite(i_max=None, extra=None):
    i_max = 4 if i_max is None else i_max
    extra = 6 if extra is None else extra
    return (hermite_sbo.golden_checks()
            + hermite_sbo.orthogonality_checks(i_max, extra)
            + hermite_sbo.route_checks(i_max, extra)
            + hermite_sbo.identity_checks(i_max, extra)
            + hermite_sbo.connection_checks(i_max, (i_max + extra) // 2 + 2)
            + hermite_sbo.zero_value_checks(i_max, extra)
            + hermite_sbo.subleading_checks(i_max, extra)
            + hermite_sbo.summed_form_checks(max(1, i_max // 2),
                                             (i_max + extra) // 2 + 1)
            + hermite_sbo.special_case_checks(i_max + extra)
            + hermite_sbo.scaling_checks(Fraction(3), max(1, i_max - 2),
                                         max(2, extra - 2)))

def sbo_laguerre_suite(i_max=None, extra=None):
    i_max = 3 if i_max is None else i_max
    extra = 5 if extra is None else extra
    return (laguerre_sbo.golden_checks()
            + laguerre_sbo.orthogonality_checks(i_max, extra)
            + laguerre_sbo.route_checks(i_max, extra)
            + laguerre_sbo.identity_checks(i_max, extra)
            + laguerre_sbo.connection_checks(i_max, extra)
            + laguerre_sbo.zero_value_checks(i_max, extra)
            + laguerre_sbo.subleading_checks(i_max, extra)
            + laguerre_sbo.summed_form_checks(i_max, i_max + extra)
            + laguerre_sbo.special_case_checks(i_max + extra)
            + laguerre_sbo.scaling_checks(Fraction(3), max(1, i_max - 1),
                                          max(2, extra - 1)))

def oracle_suite(i_max=None, extra=None):
    i_max = 2 if i_max is None else i_max
    extra = 4 if extra is None else extra
    return (oracle.hermite_agreement_checks(i_max, extra)
            + oracle.laguerre_agreement_checks(i_max, extra)
            + oracle.equal_weight_checks(i_max + extra)
            + oracle.general_weight_checks(i_max, extra)
            + oracle.scaling_consistency_checks(i_max, extra))

def bridge_suite(i_max=None, extra=None):
    i_max = 3 if i_max is None else i_max
    extra = 5 if extra is None else extra
    return (classical.classical_bridge_checks(i_max + extra)
            + laguerre_sbo.bridge_checks(i_max, extra))

def zeros_suite(i_max=None, extra=None):
    i_max = 4 if i_max is None else i_max
    extra = 6 if extra is None else extra
    return zero_structure_checks(hermite_i=i_max, hermite_extra=extra,
                                 laguerre_i=max(2, i_max - 1),
                                 laguerre_extra=max(3, extra - 1),
                                 interlace_n=max(6, extra + 2))


SUITES = {
    "exact": exact_suite,
    "classical": classical_suite,
    "measures": measures_suite,
    "sbo-hermite": sbo_hermite_suite,
    "sbo-laguerre": sbo_laguerre_suite,
    "oracle": oracle_suite,
    "bridge": bridge_suite,
    "zeros": zeros_suite,
}


def run_suite(name, i_max=None, extra=None):
    """Checks for one suite, or for every suite in registry order."""
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(SUITES[key](i_max, extra))
        return out
    if name not in SUITES:
        raise ValueError("unknown suite %r (have %s, all)"
                         % (name, ", ".join(SUITES)))
    return SUITES[name](i_max, extra)
