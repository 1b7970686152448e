"""Finite tensors in L(x)L and L(x)L(x)L, permutations, and the adjoint action.

Tensors are kept fully expanded over ordered pairs/triples of basis
generators, never over element factors, so equality-to-zero is decidable by
map emptiness.  No universal-enveloping layer is materialized: commutators of
r-matrices are computed slotwise exactly where they land for r in L(x)L.

The diagonal adjoint action is  x . (y(x)z) = [x,y](x)z + y(x)[x,z],
extended bilinearly.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterator, Mapping

from .core import (
    CENTERLESS,
    BasisIndex,
    Element,
    Mode,
    Rat,
    as_fraction,
    bracket_basis,
)

__all__ = ["Tensor2", "Tensor3", "tensor_of", "flip_tau", "cyclic_rotate", "adjoint_action"]

Key2 = tuple[BasisIndex, BasisIndex]
Key3 = tuple[BasisIndex, BasisIndex, BasisIndex]


class _Tensor:
    """Shared canonical-map machinery for rank-2 and rank-3 tensors."""

    __slots__ = ("_terms",)
    rank: int = 0

    def __init__(self, terms: Mapping[tuple, Rat] | None = None):
        clean: dict[tuple, Fraction] = {}
        if terms:
            for key, coeff in terms.items():
                if len(key) != self.rank:
                    raise ValueError(f"expected rank-{self.rank} key, got {key!r}")
                c = as_fraction(coeff)
                if c:
                    clean[key] = c
        object.__setattr__(self, "_terms", clean)

    @property
    def terms(self) -> Mapping[tuple, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def has_central(self) -> bool:
        return any(b.is_central for key in self._terms for b in key)

    def coefficient(self, key: tuple) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        return sorted(
            self._terms.items(), key=lambda kv: tuple(b.sort_key() for b in kv[0])
        )

    def __iter__(self) -> Iterator[tuple[tuple, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            acc[key] = acc.get(key, Fraction(0)) + coeff
        return type(self)(acc)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            acc[key] = acc.get(key, Fraction(0)) - coeff
        return type(self)(acc)

    def __neg__(self):
        return type(self)({k: -c for k, c in self._terms.items()})

    def __rmul__(self, scalar: Rat):
        c = as_fraction(scalar)
        return type(self)({k: c * v for k, v in self._terms.items()})

    __mul__ = __rmul__

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        from .exprs import format_tensor

        return format_tensor(self)


class Tensor2(_Tensor):
    """Finite linear combination of b1 (x) b2 basis pairs."""

    rank = 2


class Tensor3(_Tensor):
    """Finite linear combination of b1 (x) b2 (x) b3 basis triples."""

    rank = 3


def tensor_of(a: Element, b: Element) -> Tensor2:
    """Bilinear outer product a (x) b in canonical form."""
    acc: dict[Key2, Fraction] = {}
    for b1, c1 in a:
        for b2, c2 in b:
            acc[(b1, b2)] = acc.get((b1, b2), Fraction(0)) + c1 * c2
    return Tensor2(acc)


def flip_tau(t: Tensor2) -> Tensor2:
    """The flip tau(a (x) b) = b (x) a, termwise."""
    return Tensor2({(b2, b1): c for (b1, b2), c in t})


def cyclic_rotate(t: Tensor3) -> Tensor3:
    """(a, b, c) -> (b, c, a), termwise; has order 3."""
    return Tensor3({(b2, b3, b1): c for (b1, b2, b3), c in t})


def adjoint_action(x: Element, t: Tensor2, mode: Mode = CENTERLESS) -> Tensor2:
    """Diagonal action of x on a rank-2 tensor via the Lie bracket."""
    acc: dict[Key2, Fraction] = {}
    for g, cg in x:
        for (b1, b2), ct in t:
            scale = cg * ct
            for basis, coeff in bracket_basis(g, b1, mode):
                key = (basis, b2)
                acc[key] = acc.get(key, Fraction(0)) + scale * coeff
            for basis, coeff in bracket_basis(g, b2, mode):
                key = (b1, basis)
                acc[key] = acc.get(key, Fraction(0)) + scale * coeff
    return Tensor2(acc)
