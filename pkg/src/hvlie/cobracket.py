"""Cobrackets on the centerless algebra and their defect computations.

Two atomic kinds, plus sums of them:

* coboundary:  Delta_r(x) = x . r  for a fixed antisymmetric, central-free
  r in L(x)L;
* the non-coboundary cocycle  delta(L_n) = (n*alpha + gamma)(I_0 (x) I_n -
  I_n (x) I_0),  delta(I_n) = beta (I_0 (x) I_n - I_n (x) I_0).

Defects measured here (all exact, zero iff the identity holds):

* cocycle:    delta([x,y]) - x . delta(y) + y . delta(x)
* co-Jacobi:  (id + rho + rho^2)((delta (x) id) o delta)(x),
  rho the cyclic rotation, delta applied to the left slot of each term
* skewness:   t + tau(t)

All cobrackets here live on the centerless algebra; central generators are
rejected rather than coerced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    CENTERLESS,
    BasisIndex,
    Element,
    ModeError,
    Rat,
    Sector,
    as_fraction,
    bracket,
)
from .tensors import Tensor2, Tensor3, adjoint_action, cyclic_rotate, flip_tau

__all__ = [
    "CobracketSpec",
    "CoboundarySpec",
    "HVDeltaSpec",
    "SumSpec",
    "apply_cobracket",
    "cocycle_defect",
    "cojacobi_defect",
    "skew_defect",
]


def skew_defect(t: Tensor2) -> Tensor2:
    """t + tau(t); zero iff t is antisymmetric."""
    return t + flip_tau(t)


class CobracketSpec:
    """Base for cobracket specifications; combine with ``+``."""

    def apply(self, x: Element) -> Tensor2:
        raise NotImplementedError

    def __add__(self, other: "CobracketSpec") -> "SumSpec":
        if not isinstance(other, CobracketSpec):
            return NotImplemented
        left = self.parts if isinstance(self, SumSpec) else (self,)
        right = other.parts if isinstance(other, SumSpec) else (other,)
        return SumSpec(left + right)


@dataclass(frozen=True)
class CoboundarySpec(CobracketSpec):
    """Delta_r(x) = x . r; r must be central-free and antisymmetric."""

    r: Tensor2

    def __post_init__(self) -> None:
        if self.r.has_central():
            raise ModeError("coboundary r must be central-free")
        if not skew_defect(self.r).is_zero():
            raise ValueError("coboundary r must be antisymmetric (tau r = -r)")

    def apply(self, x: Element) -> Tensor2:
        if x.has_central():
            raise ModeError("cobracket argument must be central-free")
        return adjoint_action(x, self.r, CENTERLESS)


@dataclass(frozen=True)
class HVDeltaSpec(CobracketSpec):
    """delta(L_n) = (n*alpha + gamma) u_n, delta(I_n) = beta u_n,
    with u_n = I_0 (x) I_n - I_n (x) I_0."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __init__(self, alpha: Rat, beta: Rat, gamma: Rat):
        object.__setattr__(self, "alpha", as_fraction(alpha))
        object.__setattr__(self, "beta", as_fraction(beta))
        object.__setattr__(self, "gamma", as_fraction(gamma))

    def apply(self, x: Element) -> Tensor2:
        w0 = BasisIndex.w(0)
        acc: dict = {}
        for basis, c in x:
            if basis.is_central:
                raise ModeError("cobracket argument must be central-free")
            if basis.sector is Sector.V:
                n = basis.degree - 1
                scale = (n * self.alpha + self.gamma) * c
            else:
                n = basis.degree
                scale = self.beta * c
            if not scale or n == 0:
                continue
            wn = BasisIndex.w(n)
            acc[(w0, wn)] = acc.get((w0, wn), Fraction(0)) + scale
            acc[(wn, w0)] = acc.get((wn, w0), Fraction(0)) - scale
        return Tensor2(acc)


@dataclass(frozen=True)
class SumSpec(CobracketSpec):
    """Pointwise sum of cobracket specs, e.g. Delta_r + delta."""

    parts: tuple[CobracketSpec, ...]

    def apply(self, x: Element) -> Tensor2:
        out = Tensor2()
        for part in self.parts:
            out = out + part.apply(x)
        return out


def apply_cobracket(spec: CobracketSpec, x: Element) -> Tensor2:
    """Evaluate the cobracket on a central-free element."""
    return spec.apply(x)


def cocycle_defect(spec: CobracketSpec, x: Element, y: Element) -> Tensor2:
    """delta([x,y]) - x . delta(y) + y . delta(x); zero iff the 1-cocycle
    identity holds on this pair."""
    lhs = spec.apply(bracket(x, y, CENTERLESS))
    return (
        lhs
        - adjoint_action(x, spec.apply(y), CENTERLESS)
        + adjoint_action(y, spec.apply(x), CENTERLESS)
    )


def cojacobi_defect(spec: CobracketSpec, x: Element) -> Tensor3:
    """(id + rho + rho^2)((delta (x) id) o delta)(x); zero iff co-Jacobi
    holds at x."""
    inner = spec.apply(x)
    acc: dict = {}
    for (b1, b2), c in inner:
        left = spec.apply(Element({b1: 1}))
        for (a1, a2), d in left:
            key = (a1, a2, b2)
            acc[key] = acc.get(key, Fraction(0)) + c * d
    t = Tensor3(acc)
    r1 = cyclic_rotate(t)
    return t + r1 + cyclic_rotate(r1)
