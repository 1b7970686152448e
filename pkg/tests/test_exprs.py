"""Expression grammar: parsing, canonical printing, and round trips."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hvlie.core import B_CI, B_CL, B_CLI, BasisIndex, Element
from hvlie.dual import DualElement, DualIndex, EV, EW
from hvlie.exprs import (
    ParseError,
    format_dual_element,
    format_element,
    format_rational,
    format_tensor,
    parse_element,
)
from hvlie.tensors import Tensor2, tensor_of
from hvlie.core import I, L


class TestParse:
    def test_basic_sum(self):
        e = parse_element("3/2*L(2) - I(-1)")
        assert e == Element({BasisIndex.v(3): Fraction(3, 2), BasisIndex.w(-1): -1})

    def test_canonicalization_merges_terms(self):
        assert parse_element("L(0) + L(0)") == Element({BasisIndex.v(1): 2})
        assert parse_element("L(1) - L(1)").is_zero()

    def test_central_generators(self):
        e = parse_element("CL + 2*CI - 1/3*CLI")
        assert e == Element({B_CL: 1, B_CI: 2, B_CLI: Fraction(-1, 3)})

    def test_whitespace_insensitive(self):
        assert parse_element("  3/2 * L( 2 )-I(-1)") == parse_element("3/2*L(2) - I(-1)")

    def test_bare_rational_is_zero_element(self):
        assert parse_element("0").is_zero()
        assert parse_element("7").is_zero()
        assert parse_element("L(1) + 0") == L(1)

    def test_leading_negative_coefficient(self):
        assert parse_element("-1*L(2)") == -1 * L(2)
        assert parse_element("-3/4*I(0) + L(1)") == Fraction(-3, 4) * I(0) + L(1)


class TestParseErrors:
    @pytest.mark.parametrize(
        "text,column",
        [
            ("1/0*L(1)", 3),
            ("L(1) +", 6),
            ("L(", 2),
            ("Q(1)", 1),
            ("L(1) & I(0)", 6),
            ("3*", 2),
            ("L(x)", 3),
            ("", 1),
        ],
    )
    def test_column_positions(self, text, column):
        with pytest.raises(ParseError) as exc_info:
            parse_element(text)
        assert exc_info.value.column == column
        assert 1 <= exc_info.value.column <= max(len(text), 1)

    def test_message_mentions_column(self):
        with pytest.raises(ParseError, match=r"column 3"):
            parse_element("1/0*L(1)")


class TestFormat:
    def test_spec_examples(self):
        e = Element({BasisIndex.v(3): Fraction(3, 2), BasisIndex.w(-1): -1})
        assert format_element(e) == "3/2*L(2) - I(-1)"
        assert format_element(Element()) == "0"
        assert format_element(Element({B_CL: Fraction(1, 2)})) == "1/2*CL"

    def test_unit_coefficients_elided(self):
        assert format_element(L(2) + I(0)) == "L(2) + I(0)"
        assert format_element(L(2) - I(0)) == "L(2) - I(0)"

    def test_leading_negative_round_trips(self):
        e = -1 * L(2)
        assert format_element(e) == "-1*L(2)"
        assert parse_element(format_element(e)) == e

    def test_terms_sorted_by_basis_order(self):
        e = Element({B_CLI: 1, BasisIndex.w(-2): 1, BasisIndex.v(5): 1, B_CL: 1})
        assert format_element(e) == "L(4) + I(-2) + CL + CLI"

    def test_rational_formatting(self):
        assert format_rational(Fraction(7)) == "7"
        assert format_rational(Fraction(-3, 4)) == "-3/4"


class TestRoundTrip:
    def sample_elements(self, count=60):
        rng = random.Random(20260810)
        sectors = ["L", "I", "CL", "CI", "CLI"]
        out = []
        for _ in range(count):
            terms = {}
            for _ in range(rng.randint(0, 5)):
                kind = rng.choice(sectors)
                if kind == "L":
                    basis = BasisIndex.v(rng.randint(-9, 9))
                elif kind == "I":
                    basis = BasisIndex.w(rng.randint(-9, 9))
                else:
                    basis = {"CL": B_CL, "CI": B_CI, "CLI": B_CLI}[kind]
                num = rng.randint(-12, 12)
                den = rng.randint(1, 9)
                terms[basis] = Fraction(num, den)
            out.append(Element(terms))
        return out

    def test_corpus_round_trips(self):
        corpus = self.sample_elements()
        assert len(corpus) >= 50
        for e in corpus:
            text = format_element(e)
            again = parse_element(text)
            assert again == e
            assert format_element(again) == text

    def test_all_sectors_and_negative_degrees_covered(self):
        corpus = self.sample_elements()
        sectors = {b.sector for e in corpus for b in e.support()}
        assert len(sectors) == 5
        assert any(
            b.degree is not None and b.degree < 0
            for e in corpus
            for b in e.support()
        )


_basis = st.one_of(
    st.builds(BasisIndex.v, st.integers(-40, 40)),
    st.builds(BasisIndex.w, st.integers(-40, 40)),
    st.sampled_from([B_CL, B_CI, B_CLI]),
)
_coeff = st.fractions(min_value=-100, max_value=100, max_denominator=50)


@settings(max_examples=200, deadline=None)
@given(st.dictionaries(_basis, _coeff, max_size=7).map(Element))
def test_round_trip_property(e):
    text = format_element(e)
    assert parse_element(text) == e
    assert format_element(parse_element(text)) == text


class TestTensorAndDualFormat:
    def test_tensor_text(self):
        t = tensor_of(L(0), L(2)) - tensor_of(L(2), L(0))
        assert format_tensor(t) == "L(0)(x)L(2) - L(2)(x)L(0)"
        assert format_tensor(Tensor2()) == "0"

    def test_dual_text(self):
        f = DualElement({DualIndex(EV, 4): 2, DualIndex(EW, 3): -3})
        assert format_dual_element(f) == "2*eps(V,4) - 3*eps(W,3)"
        assert format_dual_element(DualElement()) == "0"
