"""Round trips and fixed formats for the exchange formats."""

import csv
import io
import json
from fractions import Fraction

import pytest

from sbopoly import serialize as sz
from sbopoly import hermite_sbo as hs
from sbopoly import zeros
from sbopoly.classical import hermite_monic


def test_rational_strings_always_carry_denominator():
    assert sz.rational_str(Fraction(1)) == "1/1"
    assert sz.rational_str(Fraction(-3, 8)) == "-3/8"
    assert sz.parse_rational("-3/8") == Fraction(-3, 8)
    assert sz.parse_rational(sz.rational_str(Fraction(10**30, 7))) == Fraction(10**30, 7)


def test_coeff_entry_round_trip_symbolic():
    from sbopoly.alphapoly import ALPHA

    c = (ALPHA + 1) * (ALPHA + 3) / 4
    entry = sz.coeff_entry(c)
    assert isinstance(entry, list)
    assert sz.parse_coeff(entry) == c
    plain = sz.coeff_entry(Fraction(5, 2))
    assert plain == "5/2"
    assert sz.parse_coeff(plain) == Fraction(5, 2)


def test_build_record_families():
    rec = sz.build_record("hermite-sbo", 4, i=1)
    assert rec.poly == hs.closed(1, 4)
    assert rec.label() == "P[1;4]"
    rec = sz.build_record("hermite", 3)
    assert rec.poly == hermite_monic(3)
    assert rec.poly.coeff(3) == 1


def test_build_record_validation():
    with pytest.raises(ValueError):
        sz.build_record("hermite-sbo", 4)  # SBO families need the order
    with pytest.raises(ValueError):
        sz.build_record("nosuch", 4)
    with pytest.raises(ValueError):
        sz.build_record("laguerre-sbo", 2, i=5)


def test_json_round_trip_numeric_and_symbolic():
    records = sz.build_records("hermite-sbo", 6, i=2)
    text = sz.records_to_json(records)
    back = sz.records_from_json(text)
    assert [r.poly for r in back] == [r.poly for r in records]

    records = sz.build_records("laguerre-sbo", 4, i=1)
    back = sz.records_from_json(sz.records_to_json(records))
    assert [r.poly for r in back] == [r.poly for r in records]
    payload = json.loads(sz.records_to_json(records))
    for entry in payload:
        for c in entry["coeffs"]:
            assert not isinstance(c, float)


def test_json_numeric_alpha_round_trip():
    records = sz.build_records("laguerre-sbo", 4, i=1, alpha=Fraction(1, 2))
    back = sz.records_from_json(sz.records_to_json(records))
    assert [r.poly for r in back] == [r.poly for r in records]
    assert back[0].alpha == Fraction(1, 2)


def test_csv_exact_rows():
    records = [sz.build_record("hermite-sbo", 2, i=0)]
    text = sz.records_to_csv(records)
    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == sz.CSV_HEADER
    # x^2 - 1/4 ascending: -1/4, 0/1, 1/1
    body = rows[1:]
    assert [r[6] for r in body] == ["-1/4", "0/1", "1/1"]
    assert body[0][0] == "hermite-sbo"
    assert body[0][5] == "0"


def test_csv_float_view():
    records = [sz.build_record("hermite-sbo", 2, i=0)]
    text = sz.records_to_csv(records, float_digits=6)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[1][6] == "-0.25"


def test_csv_float_view_rejects_symbolic():
    records = [sz.build_record("laguerre-sbo", 2, i=1)]
    with pytest.raises(ValueError):
        sz.records_to_csv(records, float_digits=6)


def test_latex_and_pretty_forms():
    rec = sz.build_record("hermite-sbo", 4, i=1)
    assert sz.record_pretty(rec) == "P[1;4] = x^4 - 7/4 x^2 + 1/8"
    latex_text = sz.record_latex(rec)
    assert latex_text.startswith(r"\hat{P}_{1;4}(x) &=")
    assert r"\frac{1}{8}" in latex_text
    block = sz.records_to_latex([rec])
    assert block.startswith(r"\begin{align}")
    assert block.rstrip().endswith(r"\end{align}")


def test_root_report_serialization():
    report = zeros.root_report(hermite_monic(4))
    data = sz.root_report_dict(report)
    assert data["degree"] == 4
    assert data["real_root_count"] == 4
    assert len(data["roots"]) == 4
    parsed = json.loads(sz.root_report_json(report))
    assert parsed["all_simple"] is True

    rows = list(csv.reader(io.StringIO(sz.root_report_csv(report))))
    assert rows[0] == ["index", "interval_low", "interval_high", "root"]
    assert len(rows) == 5
