"""Rational strings, complex pairs, report key stability."""

import json
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from higgs_threeterm.chain import RootSequence, multiplicities
from higgs_threeterm.serialize import (
    check_report,
    complex_pair_json,
    format_rational,
    parse_rational,
    profile_json,
)


def test_format_examples():
    assert format_rational(Fraction(1, 6)) == "1/6"
    assert format_rational(Fraction(-5, 6)) == "-5/6"
    assert format_rational(Fraction(2, 4)) == "1/2"  # lowest terms
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(0)) == "0"


@given(st.fractions(max_denominator=10**6))
def test_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_parse_accepts_decimal_text():
    assert parse_rational("0.5") == Fraction(1, 2)
    assert parse_rational(" -3/9 ") == Fraction(-1, 3)


def test_complex_pair():
    assert complex_pair_json((Fraction(-1, 6), Fraction(0))) == {"re": "-1/6", "im": "0"}


def test_profile_order_is_descending():
    profile = multiplicities(RootSequence((4, 2, 0, 4, 2, 0, -2)))
    assert list(profile_json(profile)) == ["4", "2", "0", "-2"]


def test_check_report_bytes_are_stable():
    seq = RootSequence((4, 2, 0, -2))
    a = json.dumps(check_report(seq), indent=2)
    b = json.dumps(check_report(seq), indent=2)
    assert a == b
