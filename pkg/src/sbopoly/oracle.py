"""Independent construction of block orthogonal families from first principles.

Nothing here reuses the closed forms: a family member is produced by solving
the defining linear system exactly — a monic polynomial of degree n whose
first i moments against the first weight vanish and which is orthogonal,
under the second weight, to the previously constructed members of its
family.  This is the reference implementation the structured constructions
are checked against, and the only route available for weight pairs away
from the doubled-decay case (general mu), where no closed forms exist.

Symbolic-exponent Laguerre families are recovered exactly by running the
numeric construction at enough integer exponents and Newton-interpolating
each coefficient, with a degree bound making the interpolation conclusive.
"""

from __future__ import annotations

from fractions import Fraction

from .alphapoly import interpolate_alpha
from .classical import hermite_monic, laguerre_monic
from .measures import MomentFunctional, hermite_pair, laguerre_pair
from .poly import Poly, X, monomial, scale_arg_monic
from .reporting import check
from . import hermite_sbo, laguerre_sbo


class SingularSystemError(ArithmeticError):
    """The defining linear system had no unique solution."""


def solve_linear(rows, rhs):
    """Solve a square rational system by Gauss-Jordan elimination."""
    n = len(rows)
    aug = [list(row) + [value] for row, value in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularSystemError("no pivot in column %d" % col)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [entry * inv for entry in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def block_member(first, second, i, n, previous):
    """Monic degree-n polynomial with vanishing first i moments under
    `first` and orthogonal under `second` to the supplied lower members."""
    if not 0 <= i <= n:
        raise ValueError("need 0 <= i <= n")
    rows = []
    rhs = []
    for m in range(i):
        rows.append([first.moment(m + k) for k in range(n)])
        rhs.append(-first.moment(m + n))
    for m in range(i, n):
        q = previous[m]
        rows.append([second.inner(q, monomial(k)) for k in range(n)])
        rhs.append(-second.inner(q, monomial(n)))
    if not rows:
        return monomial(n)
    coeffs = solve_linear(rows, rhs)
    return Poly(tuple(coeffs)) + monomial(n)


def family(first, second, i, n_max):
    """The order-i family up to degree n_max, built member by member."""
    members = {}
    for n in range(i, n_max + 1):
        members[n] = block_member(first, second, i, n, members)
    return members


def hermite_family(i, n_max, mu=Fraction(2), scale=Fraction(1)):
    first, second = hermite_pair(mu, scale)
    return family(first, second, i, n_max)


def laguerre_family(i, n_max, alpha, mu=Fraction(2), scale=Fraction(1)):
    first, second = laguerre_pair(mu, scale, Fraction(alpha))
    return family(first, second, i, n_max)


def laguerre_family_symbolic(i, n_max, mu=Fraction(2), scale=Fraction(1)):
    """Symbolic-exponent family by exact interpolation: each coefficient of
    the degree-n member is a polynomial of degree at most n in the exponent,
    so n_max + 4 integer samples pin it down with room to detect excess."""
    xs = [Fraction(a0) for a0 in range(n_max + 4)]
    sampled = [laguerre_family(i, n_max, a0, mu, scale) for a0 in xs]
    members = {}
    for n in range(i, n_max + 1):
        coeffs = []
        for k in range(n + 1):
            interp = interpolate_alpha(xs, [fam[n].coeff(k) for fam in sampled])
            if interp.degree > n:
                raise SingularSystemError(
                    "coefficient %d of degree-%d member interpolates to "
                    "exponent degree %d" % (k, n, interp.degree))
            coeffs.append(interp)
        members[n] = Poly(tuple(coeffs))
    return members


# ---------------------------------------------------------------------------
# Check suites.
# ---------------------------------------------------------------------------


def hermite_agreement_checks(i_max, extra):
    ok = True
    for i in range(i_max + 1):
        if hermite_family(i, i + extra) != hermite_sbo.family_closed(i, i + extra):
            ok = False
    return [check("hermite families match the independent linear-system build",
                  ok)]


def laguerre_agreement_checks(i_max, extra):
    ok = True
    for i in range(i_max + 1):
        if (laguerre_family_symbolic(i, i + extra)
                != laguerre_sbo.family_closed(i, i + extra)):
            ok = False
    return [check("laguerre families with symbolic exponent match the "
                  "independent linear-system build", ok)]


def equal_weight_checks(n_max):
    """With both weights equal (mu=1) and order zero the construction must
    collapse onto the classical monic families."""
    out = []
    fam = hermite_family(0, n_max, mu=Fraction(1))
    ok = all(fam[n] == hermite_monic(n) for n in range(n_max + 1))
    out.append(check("equal hermite weights reproduce the classical family",
                     ok))
    ok = True
    for alpha in (Fraction(0), Fraction(3, 2)):
        fam = laguerre_family(0, n_max, alpha, mu=Fraction(1))
        for n in range(n_max + 1):
            if fam[n] != laguerre_monic(n).subs_alpha(alpha):
                ok = False
    out.append(check("equal laguerre weights reproduce the classical family",
                     ok))
    return out


def general_weight_checks(i_max, extra, mu=Fraction(3)):
    """Away from the doubled-decay case there are no closed forms; verify
    the defining properties of the solved families directly."""
    out = []
    for label, build, first, second in (
        ("hermite", lambda i: hermite_family(i, i + extra, mu),
         *hermite_pair(mu)),
        ("laguerre", lambda i: laguerre_family(i, i + extra, Fraction(1, 2), mu),
         *laguerre_pair(mu, Fraction(1), Fraction(1, 2))),
    ):
        ok_monic = True
        ok_first = True
        ok_mutual = True
        for i in range(i_max + 1):
            fam = build(i)
            for n, p in fam.items():
                if p.degree != n or not p.is_monic:
                    ok_monic = False
                for m in range(i):
                    if first.inner(p, monomial(m)) != 0:
                        ok_first = False
            degrees = sorted(fam)
            for a in range(len(degrees)):
                for b in range(a + 1, len(degrees)):
                    if second.inner(fam[degrees[a]], fam[degrees[b]]) != 0:
                        ok_mutual = False
        out.append(check(
            "%s family at general second weight is monic with the required "
            "vanishing moments" % label, ok_monic and ok_first))
        out.append(check(
            "%s family at general second weight is mutually orthogonal"
            % label, ok_mutual))
    return out


def scaling_consistency_checks(i_max, extra, scale=Fraction(3)):
    """Solving at a rescaled weight pair must agree with rescaling the
    solved family."""
    out = []
    ok = True
    for i in range(i_max + 1):
        plain = hermite_family(i, i + extra)
        scaled = hermite_family(i, i + extra, scale=scale)
        for n in range(i, i + extra + 1):
            if scaled[n] != scale_arg_monic(plain[n], scale, "sqrt"):
                ok = False
    out.append(check("hermite linear-system build commutes with rescaling",
                     ok))
    ok = True
    alpha = Fraction(1, 2)
    for i in range(i_max + 1):
        plain = laguerre_family(i, i + extra, alpha)
        scaled = laguerre_family(i, i + extra, alpha, scale=scale)
        for n in range(i, i + extra + 1):
            if scaled[n] != scale_arg_monic(plain[n], scale, "linear"):
                ok = False
    out.append(check("laguerre linear-system build commutes with rescaling",
                     ok))
    return out
