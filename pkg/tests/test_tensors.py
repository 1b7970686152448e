"""Tensors, permutations, and the adjoint action."""

from fractions import Fraction

import pytest

from hvlie.core import (
    CENTERLESS,
    B_CL,
    BasisIndex,
    Element,
    I,
    L,
    CL,
    ModeError,
    bracket,
    lie_generators,
)
from hvlie.tensors import Tensor2, Tensor3, adjoint_action, cyclic_rotate, flip_tau, tensor_of


class TestTensorOf:
    def test_outer_product_of_units(self):
        t = tensor_of(L(0), I(2))
        assert t == Tensor2({(BasisIndex.v(1), BasisIndex.w(2)): 1})

    def test_absorbing_zero(self):
        assert tensor_of(Element(), I(2)).is_zero()
        assert tensor_of(L(1), Element()).is_zero()

    def test_coefficient_product(self):
        t = tensor_of(Fraction(2) * L(1), Fraction(3) * I(0))
        assert t == Tensor2({(BasisIndex.v(2), BasisIndex.w(0)): 6})

    def test_bilinear_expansion(self):
        t = tensor_of(L(0) + I(1), L(2))
        assert len(t) == 2
        assert t.coefficient((BasisIndex.v(1), BasisIndex.v(3))) == 1
        assert t.coefficient((BasisIndex.w(1), BasisIndex.v(3))) == 1


class TestPermutations:
    def test_flip_swaps_slots(self):
        t = Tensor2({(BasisIndex.v(1), BasisIndex.w(0)): 1})
        assert flip_tau(t) == Tensor2({(BasisIndex.w(0), BasisIndex.v(1)): 1})

    def test_flip_is_a_linear_involution(self):
        t = tensor_of(L(0) + 2 * I(3), L(1) - I(0))
        assert flip_tau(flip_tau(t)) == t
        assert flip_tau(Tensor2()).is_zero()

    def test_rotate_moves_first_slot_last(self):
        t = Tensor3({(BasisIndex.v(1), BasisIndex.w(0), B_CL): 1})
        rotated = cyclic_rotate(t)
        assert rotated == Tensor3({(BasisIndex.w(0), B_CL, BasisIndex.v(1)): 1})

    def test_rotate_has_order_three(self):
        t = Tensor3(
            {
                (BasisIndex.v(1), BasisIndex.w(0), BasisIndex.v(2)): Fraction(3, 2),
                (BasisIndex.w(-1), BasisIndex.w(4), BasisIndex.v(0)): -2,
            }
        )
        assert cyclic_rotate(cyclic_rotate(cyclic_rotate(t))) == t
        assert cyclic_rotate(Tensor3()).is_zero()


class TestAdjointAction:
    def test_diagonal_action_on_l0(self):
        t = tensor_of(L(1), L(2))
        assert adjoint_action(L(0), t) == Fraction(3) * t

    def test_abelian_w_sector_acts_trivially(self):
        t = tensor_of(I(0), I(3))
        assert adjoint_action(I(5), t, CENTERLESS).is_zero()

    def test_zero_tensor_fixed(self):
        assert adjoint_action(L(2), Tensor2()).is_zero()

    def test_central_rejected_in_centerless_mode(self):
        with pytest.raises(ModeError):
            adjoint_action(CL(), tensor_of(L(0), L(1)), CENTERLESS)

    def test_module_axiom_on_window(self):
        t = tensor_of(L(1), I(-1)) + Fraction(1, 2) * tensor_of(I(2), L(0))
        gens = lie_generators(3, CENTERLESS)
        for x in gens:
            for y in gens:
                lhs = adjoint_action(bracket(x, y), t)
                rhs = adjoint_action(x, adjoint_action(y, t)) - adjoint_action(
                    y, adjoint_action(x, t)
                )
                assert lhs == rhs

    def test_action_commutes_with_flip(self):
        t = tensor_of(L(1), I(-1)) - 3 * tensor_of(I(0), L(2))
        for x in lie_generators(3, CENTERLESS):
            assert adjoint_action(x, flip_tau(t)) == flip_tau(adjoint_action(x, t))
