"""Yang-Baxter defects: brute force against the closed six-term form."""

from fractions import Fraction

import pytest

from hvlie.core import BasisIndex, I, L, CL, ModeError
from hvlie.tensors import Tensor3, tensor_of
from hvlie.ybe import (
    RSpec,
    ScanRow,
    alternating_r,
    classify_cybe,
    cybe_defect,
    format_scan_row,
    hv_r_family,
)


def closed_family_defect(m: int, n: int, q) -> Tensor3:
    """Independent oracle: the six-term closed form of C(r) for the family
    r = E (x) (A + B) - (A + B) (x) E with E = L(0), A = L(m), B = q I(n),
    derived by hand from the slotwise commutators:

        C(r) = (n-m) A(x)B(x)E + (m-n) A(x)E(x)B + (m-n) B(x)A(x)E
             - (m-n) B(x)E(x)A - (m-n) E(x)A(x)B + (m-n) E(x)B(x)A
    """
    q = Fraction(q)
    a = BasisIndex.v(m + 1)
    e = BasisIndex.v(1)
    b = BasisIndex.w(n)
    c = Fraction(m - n)
    terms = {}

    def add(key, coeff):
        if coeff:
            terms[key] = terms.get(key, Fraction(0)) + coeff

    add((a, b, e), -c * q)
    add((a, e, b), c * q)
    add((b, a, e), c * q)
    add((b, e, a), -c * q)
    add((e, a, b), -c * q)
    add((e, b, a), c * q)
    return Tensor3(terms)


class TestAlternatingR:
    def test_definition(self):
        r = alternating_r(L(0), L(2))
        assert r == tensor_of(L(0), L(2)) - tensor_of(L(2), L(0))

    def test_self_pair_vanishes(self):
        assert alternating_r(L(1) + I(0), L(1) + I(0)).is_zero()

    def test_mixed_sector_pair(self):
        r = alternating_r(L(0), I(0))
        assert r == tensor_of(L(0), I(0)) - tensor_of(I(0), L(0))

    def test_central_factors_rejected(self):
        with pytest.raises(ModeError):
            alternating_r(CL(), L(0))
        with pytest.raises(ModeError):
            RSpec(L(0), CL())

    def test_rspec_tensor(self):
        assert RSpec(L(0), L(3)).tensor() == alternating_r(L(0), L(3))


class TestHvRFamily:
    def test_expands_to_alternating_form(self):
        assert hv_r_family(2, 2, 1) == alternating_r(L(0), L(2) + I(2))
        assert hv_r_family(0, 5, 3) == alternating_r(L(0), L(0) + 3 * I(5))

    def test_q_zero_is_pure_virasoro(self):
        assert hv_r_family(3, -1, 0) == alternating_r(L(0), L(3))


class TestCybeDefect:
    def test_matches_closed_form_on_window(self):
        for m in range(-3, 4):
            for n in range(-3, 4):
                for q in (Fraction(0), Fraction(1), Fraction(-5, 3)):
                    assert cybe_defect(hv_r_family(m, n, q)) == closed_family_defect(
                        m, n, q
                    )

    def test_specific_defect_term_for_2_1_1(self):
        defect = cybe_defect(hv_r_family(2, 1, 1))
        key = (BasisIndex.v(3), BasisIndex.w(1), BasisIndex.v(1))
        assert defect.coefficient(key) == Fraction(-1)

    def test_solutions_from_each_predicate_case(self):
        assert cybe_defect(hv_r_family(3, 3, 5)).is_zero()
        assert cybe_defect(hv_r_family(0, 7, -3)).is_zero()
        assert cybe_defect(hv_r_family(4, -2, 0)).is_zero()
        assert not cybe_defect(hv_r_family(2, 1, 1)).is_zero()

    def test_pure_w_second_factor_is_always_a_solution(self):
        for n in range(-3, 4):
            assert cybe_defect(alternating_r(L(0), 2 * I(n))).is_zero()

    def test_pure_virasoro_r_is_always_a_solution(self):
        for m in range(-5, 6):
            if m != 0:
                assert cybe_defect(alternating_r(L(0), L(m))).is_zero()

    def test_zero_input(self):
        from hvlie.tensors import Tensor2

        assert cybe_defect(Tensor2()).is_zero()

    def test_sign_flip_preserves_solutions(self):
        for m, n, q in ((2, 2, 3), (2, 1, 1)):
            r = hv_r_family(m, n, q)
            assert cybe_defect(r).is_zero() == cybe_defect(-1 * r).is_zero()


class TestClassifyCybe:
    def test_rows_agree_with_predicate_on_window(self):
        rows = classify_cybe((-4, 4), (-4, 4), [0, 1, Fraction(7, 2)])
        assert all(row.agree for row in rows)
        assert len(rows) == 9 * 9 * 3

    def test_row_order_is_lexicographic(self):
        rows = classify_cybe((0, 1), (0, 1), [1, 2])
        keys = [(row.m, row.n, row.q) for row in rows]
        assert keys == [
            (0, 0, 1),
            (0, 0, 2),
            (0, 1, 1),
            (0, 1, 2),
            (1, 0, 1),
            (1, 0, 2),
            (1, 1, 1),
            (1, 1, 2),
        ]

    def test_specific_rows(self):
        by_key = {
            (row.m, row.n, row.q): row
            for row in classify_cybe((-5, 5), (-5, 5), [Fraction(1), Fraction(-3)])
        }
        assert by_key[(2, 1, Fraction(1))].is_solution is False
        assert by_key[(0, 5, Fraction(-3))].is_solution is True
        assert by_key[(4, -2, Fraction(-3))].is_solution is False

    def test_empty_ranges_rejected(self):
        with pytest.raises(ValueError):
            classify_cybe((2, 1), (0, 0), [1])
        with pytest.raises(ValueError):
            classify_cybe((0, 0), (0, 0), [])

    def test_row_format(self):
        row = ScanRow(2, 1, Fraction(7, 2), False, False)
        assert (
            format_scan_row(row)
            == "m=2 n=1 q=7/2 cybe=NONZERO predicted=NONZERO agree=YES"
        )
