"""Lossless JSON / CSV / LaTeX views of exact polynomials.

Rationals travel as ``"p/q"`` strings (never floats) so JSON output parses
back bit-exactly.  A coefficient that is itself a polynomial in the symbolic
weight exponent travels as a list of rational strings, ascending powers.
Floats appear only in the explicitly requested CSV float view and in refined
root output.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from . import classical, hermite_sbo, laguerre_sbo
from .alphapoly import AlphaPoly
from .poly import Poly, latex, pretty, scalar_str

HERMITE_SBO = "hermite-sbo"
LAGUERRE_SBO = "laguerre-sbo"
HERMITE = "hermite"
LAGUERRE = "laguerre"
FAMILIES = (HERMITE_SBO, LAGUERRE_SBO, HERMITE, LAGUERRE)
SBO_FAMILIES = (HERMITE_SBO, LAGUERRE_SBO)
ALPHA_FAMILIES = (LAGUERRE_SBO, LAGUERRE)

SYMBOLIC = "symbolic"

CSV_HEADER = ("family", "i", "n", "alpha", "degree", "coeff_index", "coeff")


def rational_str(value):
    """Render a rational as "p/q", denominator always present ("1/1")."""
    value = Fraction(value)
    return "%d/%d" % (value.numerator, value.denominator)


def parse_rational(text):
    """Accept "p/q" or a plain integer string."""
    return Fraction(text)


def coeff_entry(c):
    """JSON form of one coefficient: string, or list of strings if symbolic."""
    if isinstance(c, AlphaPoly):
        return [rational_str(v) for v in c.coeffs]
    return rational_str(c)


def parse_coeff(entry):
    if isinstance(entry, list):
        return AlphaPoly(tuple(parse_rational(v) for v in entry))
    return parse_rational(entry)


# ---------------------------------------------------------------------------
# Records.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolyRecord:
    """One family member plus the indices that name it."""

    family: str
    i: int | None
    n: int
    alpha: object  # Fraction, SYMBOLIC, or None
    poly: Poly

    def label(self):
        if self.family in SBO_FAMILIES:
            core = "P[%d;%d]" % (self.i, self.n)
        else:
            core = "%s[%d]" % (self.family[0].upper(), self.n)
        if self.alpha is SYMBOLIC or self.alpha == SYMBOLIC:
            return core + "(a)"
        if self.alpha is not None:
            return core + "(a=%s)" % self.alpha
        return core

    def to_dict(self):
        out = {"family": self.family, "n": self.n}
        if self.i is not None:
            out["i"] = self.i
        if self.alpha is not None:
            out["alpha"] = (SYMBOLIC if self.alpha == SYMBOLIC
                            else rational_str(self.alpha))
        out["coeffs"] = [coeff_entry(c) for c in self.poly.coeffs]
        return out


def record_from_dict(data):
    alpha = data.get("alpha")
    if alpha is not None and alpha != SYMBOLIC:
        alpha = parse_rational(alpha)
    return PolyRecord(
        family=data["family"],
        i=data.get("i"),
        n=data["n"],
        alpha=alpha,
        poly=Poly(tuple(parse_coeff(c) for c in data["coeffs"])),
    )


def _parse_alpha_option(alpha):
    """CLI-style alpha: None, "symbolic", or a rational string / number."""
    if alpha is None or alpha == SYMBOLIC:
        return alpha
    return Fraction(alpha)


def build_record(family, n, i=None, alpha=None):
    """Construct the named member.  Classical families come out monic."""
    if family not in FAMILIES:
        raise ValueError("unknown family %r" % (family,))
    alpha = _parse_alpha_option(alpha)
    if family not in ALPHA_FAMILIES and alpha is not None:
        raise ValueError("%s takes no alpha" % family)
    if family in SBO_FAMILIES:
        if i is None:
            raise ValueError("%s needs the block index i" % family)
        if not 0 <= i <= n:
            raise ValueError("need 0 <= i <= n, got i=%d n=%d" % (i, n))
    elif i is not None:
        raise ValueError("%s takes no block index" % family)

    if family == HERMITE_SBO:
        poly = hermite_sbo.closed(i, n)
    elif family == LAGUERRE_SBO:
        poly = laguerre_sbo.closed(i, n)
    elif family == HERMITE:
        poly = classical.hermite_monic(n)
    else:
        poly = classical.laguerre_monic(n)

    if family in ALPHA_FAMILIES:
        if alpha is None:
            alpha = SYMBOLIC
        if alpha != SYMBOLIC:
            poly = poly.subs_alpha(alpha)
    return PolyRecord(family=family, i=i, n=n, alpha=alpha, poly=poly)


def build_records(family, n_max, i=None, alpha=None):
    """All members from the block floor up to n_max (classical: 0..n_max)."""
    start = i if family in SBO_FAMILIES and i is not None else 0
    if n_max < start:
        raise ValueError("n_max below the first member")
    return [build_record(family, n, i=i, alpha=alpha)
            for n in range(start, n_max + 1)]


# ---------------------------------------------------------------------------
# JSON.
# ---------------------------------------------------------------------------


def records_to_json(records, indent=2):
    payload = [r.to_dict() for r in records]
    return json.dumps(payload, indent=indent)


def records_from_json(text):
    return [record_from_dict(d) for d in json.loads(text)]


# ---------------------------------------------------------------------------
# CSV.
# ---------------------------------------------------------------------------


def _float_str(value, digits):
    return "%.*g" % (digits, float(value))


def _csv_alpha(record):
    if record.alpha is None:
        return ""
    if record.alpha == SYMBOLIC:
        return SYMBOLIC
    return rational_str(record.alpha)


def record_csv_rows(record, float_digits=None):
    """One row per coefficient, ascending.  float_digits switches the coeff
    column to rounded floats, which requires numeric coefficients."""
    rows = []
    alpha = _csv_alpha(record)
    for k, c in enumerate(record.poly.coeffs):
        if float_digits is None:
            cell = (scalar_str(c) if isinstance(c, AlphaPoly)
                    else rational_str(c))
        else:
            if isinstance(c, AlphaPoly):
                raise ValueError(
                    "float columns need a numeric alpha, not symbolic")
            cell = _float_str(c, float_digits)
        rows.append((record.family,
                     "" if record.i is None else record.i,
                     record.n, alpha, record.poly.degree, k, cell))
    return rows


def records_to_csv(records, float_digits=None):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in records:
        writer.writerows(record_csv_rows(record, float_digits))
    return out.getvalue()


# ---------------------------------------------------------------------------
# LaTeX and pretty text.
# ---------------------------------------------------------------------------


def record_latex(record):
    if record.family in SBO_FAMILIES:
        name = r"\hat{P}_{%d;%d}(x)" % (record.i, record.n)
    elif record.family == HERMITE:
        name = r"\hat{H}_{%d}(x)" % record.n
    else:
        name = r"\hat{L}^{(\alpha)}_{%d}(x)" % record.n
    return "%s &= %s \\\\" % (name, latex(record.poly))


def records_to_latex(records):
    lines = [r"\begin{align}"]
    lines += ["  " + record_latex(r) for r in records]
    lines.append(r"\end{align}")
    return "\n".join(lines) + "\n"


def record_pretty(record):
    return "%s = %s" % (record.label(), pretty(record.poly))


def records_to_pretty(records):
    return "\n".join(record_pretty(r) for r in records) + "\n"


# ---------------------------------------------------------------------------
# Root reports.
# ---------------------------------------------------------------------------


def root_report_dict(report):
    """Exact fields as rational strings; refined roots as floats."""
    return {
        "degree": report.degree,
        "real_root_count": report.real_root_count,
        "all_simple": report.all_simple,
        "all_nonnegative": report.all_nonnegative,
        "intervals": [[rational_str(lo), rational_str(hi)]
                      for lo, hi in report.intervals],
        "roots": list(report.roots),
    }


def root_report_json(report, indent=2):
    return json.dumps(root_report_dict(report), indent=indent)


def root_report_csv(report):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(("index", "interval_low", "interval_high", "root"))
    for idx, ((lo, hi), root) in enumerate(zip(report.intervals,
                                               report.roots)):
        writer.writerow((idx, rational_str(lo), rational_str(hi),
                         repr(root)))
    return out.getvalue()
