"""Exact scalars, basis indexing, sparse elements, and the Lie bracket.

The twisted Heisenberg-Virasoro algebra is spanned by L_m, I_n (m, n in Z)
together with three central generators C_L, C_I, C_LI, subject to

    [L_m, L_n] = (n - m) L_{m+n} + delta_{m+n,0} (m^3 - m)/12 C_L
    [I_m, I_n] = n delta_{m+n,0} C_I
    [L_m, I_n] = n I_{m+n} + delta_{m+n,0} (m^2 + m) C_LI

and everything central bracketing to zero.  Dropping the central terms gives
the centerless algebra, which has a polynomial realization inside
K[x^{+-1}] (+) K[x^{+-1}]:  L_m = (x^{m+1}, 0), I_n = (0, x^n).

Internally the basis is indexed by monomial degree, not Lie index: V_p stands
for (x^p, 0) and W_q for (0, x^q), so L_m = V_{m+1} and I_n = W_n.  In that
storage the centerless table reads

    [V_p, V_s] = (s - p) V_{p+s-1}
    [V_p, W_q] = q W_{p+q-1}
    [W_a, W_b] = 0.

All coefficients are exact rationals (``fractions.Fraction``); every element
is kept in canonical form (no stored zero coefficients), so equality-to-zero
is simply emptiness.  Values are immutable after construction and all
operations are pure functions: thread-safe with no synchronization.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterator, Mapping, Union

__all__ = [
    "Sector",
    "BasisIndex",
    "Element",
    "Mode",
    "ModeError",
    "UsageError",
    "WindowTooSmallError",
    "DegenerateFamilyError",
    "B_CL",
    "B_CI",
    "B_CLI",
    "CENTRAL_BASIS",
    "Rat",
    "as_fraction",
    "make_generator",
    "L",
    "I",
    "CL",
    "CI",
    "CLI",
    "combine",
    "bracket",
    "bracket_basis",
    "lie_generators",
]

Rat = Union[Fraction, int]


class UsageError(ValueError):
    """Malformed constructor or operation arguments."""


class ModeError(UsageError):
    """A central generator appeared where the centerless algebra is required."""


class WindowTooSmallError(ValueError):
    """A windowed computation cannot certify its result at this window size."""


class DegenerateFamilyError(UsageError):
    """Family parameters make the defining r-matrix vanish identically."""


class Sector(enum.IntEnum):
    """Basis sectors, ordered V < W < CL < CI < CLI for canonical printing."""

    V = 0
    W = 1
    CL = 2
    CI = 3
    CLI = 4


_CENTRAL_SECTORS = (Sector.CL, Sector.CI, Sector.CLI)


@dataclass(frozen=True)
class BasisIndex:
    """A tagged basis generator: V_p, W_q, or one of the central lines.

    Central sectors carry no degree (``degree is None``).
    """

    sector: Sector
    degree: int | None = None

    def __post_init__(self) -> None:
        if self.sector in (Sector.V, Sector.W):
            if self.degree is None:
                raise UsageError(f"sector {self.sector.name} requires a degree")
        elif self.degree is not None:
            raise UsageError(f"central sector {self.sector.name} carries no degree")

    @classmethod
    def v(cls, degree: int) -> "BasisIndex":
        return cls(Sector.V, degree)

    @classmethod
    def w(cls, degree: int) -> "BasisIndex":
        return cls(Sector.W, degree)

    @property
    def is_central(self) -> bool:
        return self.sector in _CENTRAL_SECTORS

    def sort_key(self) -> tuple[int, int]:
        return (int(self.sector), self.degree if self.degree is not None else 0)

    def label(self) -> str:
        """Lie-label spelling: V_p prints as L(p-1), W_q as I(q)."""
        if self.sector is Sector.V:
            return f"L({self.degree - 1})"
        if self.sector is Sector.W:
            return f"I({self.degree})"
        return self.sector.name

    def __repr__(self) -> str:
        return self.label()


B_CL = BasisIndex(Sector.CL)
B_CI = BasisIndex(Sector.CI)
B_CLI = BasisIndex(Sector.CLI)
CENTRAL_BASIS = (B_CL, B_CI, B_CLI)


def as_fraction(value: Rat | str) -> Fraction:
    """Coerce ints and 'p/q' strings to Fraction; reject non-exact input."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise UsageError(f"not an exact rational: {value!r}")


class Element:
    """A finite linear combination of basis generators over Q.

    Canonical form: zero coefficients are dropped eagerly, so two elements are
    equal iff their term maps are equal, and ``is_zero`` is emptiness.
    Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[BasisIndex, Rat] | None = None):
        clean: dict[BasisIndex, Fraction] = {}
        if terms:
            for basis, coeff in terms.items():
                c = as_fraction(coeff)
                if c:
                    clean[basis] = c
        object.__setattr__(self, "_terms", clean)

    @property
    def terms(self) -> Mapping[BasisIndex, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def has_central(self) -> bool:
        return any(b.is_central for b in self._terms)

    def coefficient(self, basis: BasisIndex) -> Fraction:
        return self._terms.get(basis, Fraction(0))

    def support(self) -> frozenset[BasisIndex]:
        return frozenset(self._terms)

    def sorted_terms(self) -> list[tuple[BasisIndex, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def __iter__(self) -> Iterator[tuple[BasisIndex, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        acc = dict(self._terms)
        for basis, coeff in other._terms.items():
            acc[basis] = acc.get(basis, Fraction(0)) + coeff
        return Element(acc)

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        acc = dict(self._terms)
        for basis, coeff in other._terms.items():
            acc[basis] = acc.get(basis, Fraction(0)) - coeff
        return Element(acc)

    def __neg__(self) -> "Element":
        return Element({b: -c for b, c in self._terms.items()})

    def __rmul__(self, scalar: Rat) -> "Element":
        c = as_fraction(scalar)
        return Element({b: c * v for b, v in self._terms.items()})

    __mul__ = __rmul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        from .exprs import format_element

        return format_element(self)


ZERO = Element()


def make_generator(kind: str, index: int | None = None) -> Element:
    """Build a single-generator element from its Lie label.

    L(m) is stored as V_{m+1}, I(n) as W_n; CL/CI/CLI take no index.
    """
    kind = kind.upper()
    if kind in ("L", "I"):
        if index is None:
            raise UsageError(f"generator {kind} requires an index")
        basis = BasisIndex.v(index + 1) if kind == "L" else BasisIndex.w(index)
        return Element({basis: 1})
    if kind in ("CL", "CI", "CLI"):
        if index is not None:
            raise UsageError(f"central generator {kind} takes no index")
        central = {"CL": B_CL, "CI": B_CI, "CLI": B_CLI}[kind]
        return Element({central: 1})
    raise UsageError(f"unknown generator kind: {kind!r}")


def L(m: int) -> Element:
    return Element({BasisIndex.v(m + 1): 1})


def I(n: int) -> Element:  # noqa: E743 - Lie-label name
    return Element({BasisIndex.w(n): 1})


def CL() -> Element:
    return Element({B_CL: 1})


def CI() -> Element:
    return Element({B_CI: 1})


def CLI() -> Element:
    return Element({B_CLI: 1})


def combine(c1: Rat, e1: Element, c2: Rat, e2: Element) -> Element:
    """c1*e1 + c2*e2 in canonical form."""
    a, b = as_fraction(c1), as_fraction(c2)
    acc = {basis: a * coeff for basis, coeff in e1}
    for basis, coeff in e2:
        acc[basis] = acc.get(basis, Fraction(0)) + b * coeff
    return Element(acc)


Mode = str
CENTERLESS: Mode = "centerless"
CENTRAL: Mode = "central"
_MODES = (CENTERLESS, CENTRAL)


def _check_mode(mode: Mode) -> bool:
    if mode not in _MODES:
        raise UsageError(f"unknown bracket mode: {mode!r}")
    return mode == CENTRAL


def bracket_basis(
    b1: BasisIndex, b2: BasisIndex, mode: Mode = CENTERLESS
) -> list[tuple[BasisIndex, Fraction]]:
    """Bracket of two basis generators as a sparse term list.

    Works in monomial-degree storage; central contributions appear only in
    central mode, at total Lie index zero.
    """
    central = _check_mode(mode)
    s1, s2 = b1.sector, b2.sector
    if s1 in _CENTRAL_SECTORS or s2 in _CENTRAL_SECTORS:
        if not central:
            raise ModeError(
                f"central generator {b1 if b1.is_central else b2} in centerless bracket"
            )
        return []
    p, q = b1.degree, b2.degree
    out: list[tuple[BasisIndex, Fraction]] = []
    if s1 is Sector.V and s2 is Sector.V:
        if q != p:
            out.append((BasisIndex.v(p + q - 1), Fraction(q - p)))
        if central and p + q == 2:
            m = p - 1
            c = Fraction(m**3 - m, 12)
            if c:
                out.append((B_CL, c))
    elif s1 is Sector.V and s2 is Sector.W:
        if q != 0:
            out.append((BasisIndex.w(p + q - 1), Fraction(q)))
        if central and p + q == 1:
            m = p - 1
            c = Fraction(m * m + m)
            if c:
                out.append((B_CLI, c))
    elif s1 is Sector.W and s2 is Sector.V:
        out = [(b, -c) for b, c in bracket_basis(b2, b1, mode)]
    else:  # W, W
        if central and p + q == 0 and q != 0:
            out.append((B_CI, Fraction(q)))
    return out


def bracket(x: Element, y: Element, mode: Mode = CENTERLESS) -> Element:
    """Bilinear extension of the generator bracket table.

    In centerless mode central generators are rejected rather than dropped.
    """
    central = _check_mode(mode)
    if not central and (x.has_central() or y.has_central()):
        raise ModeError("central generator supplied in centerless mode")
    acc: dict[BasisIndex, Fraction] = {}
    for b1, c1 in x:
        for b2, c2 in y:
            scale = c1 * c2
            for basis, coeff in bracket_basis(b1, b2, mode):
                acc[basis] = acc.get(basis, Fraction(0)) + scale * coeff
    return Element(acc)


def lie_generators(window: int, mode: Mode = CENTERLESS) -> list[Element]:
    """All L(m), I(m) for |m| <= window, plus the centrals in central mode."""
    gens: list[Element] = []
    for m in range(-window, window + 1):
        gens.append(L(m))
    for m in range(-window, window + 1):
        gens.append(I(m))
    if _check_mode(mode):
        gens.extend([CL(), CI(), CLI()])
    return gens
