"""Two-sided recurrence evaluation and windowed translate ranks."""

from fractions import Fraction

import pytest

from hvlie.core import BasisIndex, ModeError, UsageError, WindowTooSmallError
from hvlie.recurrence import (
    RecurrenceFunctional,
    constant_functional,
    fibonacci_functional,
    rational_rank,
    recurrence_eval,
    translate_rank_lie,
    translate_rank_mu,
    zero_functional,
)


class TestConstruction:
    def test_trailing_coefficient_must_be_nonzero(self):
        with pytest.raises(UsageError):
            RecurrenceFunctional((1, 0), 0, (0, 1))

    def test_seed_length_must_match_order(self):
        with pytest.raises(UsageError):
            RecurrenceFunctional((1, 1), 0, (0,))

    def test_empty_coefficients_rejected(self):
        with pytest.raises(UsageError):
            RecurrenceFunctional((), 0, ())

    def test_sector_validation(self):
        with pytest.raises(UsageError):
            RecurrenceFunctional((1,), 0, (1,), sector="third")


class TestEvaluation:
    def test_fibonacci_forward(self):
        fib = fibonacci_functional()
        values = [recurrence_eval(fib, n) for n in range(11)]
        assert values == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]

    def test_fibonacci_backward(self):
        fib = fibonacci_functional()
        assert recurrence_eval(fib, -1) == 1
        assert recurrence_eval(fib, -2) == -1
        assert [recurrence_eval(fib, n) for n in range(-6, 0)] == [-8, 5, -3, 2, -1, 1]

    def test_two_sided_consistency(self):
        rf = RecurrenceFunctional((Fraction(1, 2), 3), -2, (1, Fraction(2, 3)))
        for n in range(-8, 9):
            assert recurrence_eval(rf, n) == Fraction(1, 2) * recurrence_eval(
                rf, n - 1
            ) + 3 * recurrence_eval(rf, n - 2)

    def test_constant_sequence(self):
        rf = constant_functional(7)
        assert all(recurrence_eval(rf, n) == 7 for n in range(-5, 6))

    def test_anchored_away_from_zero(self):
        rf = RecurrenceFunctional((2,), 5, (3,))
        assert recurrence_eval(rf, 5) == 3
        assert recurrence_eval(rf, 7) == 12
        assert recurrence_eval(rf, 3) == Fraction(3, 4)


class TestRationalRank:
    def test_basic_ranks(self):
        one = Fraction(1)
        zero = Fraction(0)
        assert rational_rank([]) == 0
        assert rational_rank([[zero, zero]]) == 0
        assert rational_rank([[one, zero], [zero, one]]) == 2
        assert rational_rank([[one, one], [one, one]]) == 1
        assert (
            rational_rank(
                [
                    [Fraction(1, 2), one],
                    [Fraction(1, 4), Fraction(1, 2)],
                    [one, zero],
                ]
            )
            == 2
        )


class TestTranslateRankMu:
    def test_fibonacci_rank_is_two(self):
        fib = fibonacci_functional()
        assert translate_rank_mu(fib, 8) == 2

    def test_constant_rank_is_one(self):
        assert translate_rank_mu(constant_functional(), 8) == 1

    def test_zero_rank_is_zero(self):
        assert translate_rank_mu(zero_functional(), 8) == 0

    def test_rank_bounded_by_order_and_stable(self):
        fib = fibonacci_functional()
        ranks = [translate_rank_mu(fib, n) for n in (6, 8, 10)]
        assert all(r <= fib.order for r in ranks)
        assert len(set(ranks)) == 1

    def test_window_too_small(self):
        with pytest.raises(WindowTooSmallError):
            translate_rank_mu(fibonacci_functional(), 3)


class TestTranslateRankLie:
    GENS = [BasisIndex.v(d) for d in (0, 1, 2)] + [BasisIndex.w(d) for d in (0, 1, 2)]

    def test_fibonacci_pair_rank_stabilizes(self):
        pair = (fibonacci_functional("first"), fibonacci_functional("second"))
        r8 = translate_rank_lie(pair, self.GENS, 8)
        r10 = translate_rank_lie(pair, self.GENS, 10)
        assert r8 == r10
        assert 0 < r8 <= len(self.GENS)

    def test_zero_pair(self):
        pair = (zero_functional("first"), zero_functional("second"))
        assert translate_rank_lie(pair, self.GENS, 8) == 0

    def test_constant_pair_single_generator(self):
        pair = (constant_functional(3, "first"), constant_functional(3, "second"))
        assert translate_rank_lie(pair, [BasisIndex.v(1)], 8) <= 2

    def test_central_generator_rejected(self):
        from hvlie.core import B_CL

        pair = (fibonacci_functional(), fibonacci_functional())
        with pytest.raises(ModeError):
            translate_rank_lie(pair, [B_CL], 8)

    def test_window_too_small(self):
        pair = (fibonacci_functional(), fibonacci_functional())
        with pytest.raises(WindowTooSmallError):
            translate_rank_lie(pair, self.GENS, 2)
