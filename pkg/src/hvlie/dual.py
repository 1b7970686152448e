"""Dual-side structures: the eps basis, the pairing, and dual Lie brackets.

The centerless algebra sits inside K[x^{+-1}] (+) K[x^{+-1}] with standard
basis (x^i, 0), (0, x^j).  The dual basis is written (eps^i, 0), (0, eps^j):

    <(eps^i, 0), (x^j, 0)> = delta_{i,j}        cross-sector pairings vanish.

``DualIndex(EV, i)`` is (eps^i, 0) and ``DualIndex(EW, j)`` is (0, eps^j).

For each cobracket Delta on the algebra, the dual bracket is defined by the
pairing  <[f, g], xi> = <f (x) g, Delta(xi)>.  Five closed-form families are
implemented (each the total display formula in all indices, antisymmetric by
construction), together with a reconstruction oracle that recovers [f, g]
coefficientwise from the pairing over a window of basis elements:

* T42(m), m != 0:   r = L(0) (x) L(m) - L(m) (x) L(0)
* T43(m, q):        r = L(0) (x) (L(m) + q I(m)) - ...
* T44a(m, q):       r = L(0) (x) (L(0) + q I(m)) - ...
* T44b(m, q):       r = L(0) (x) (q I(m)) - ...      (equal to T44a's r:
  the L(0) (x) L(0) terms cancel in the alternating construction)
* T45(alpha, beta, gamma): the non-coboundary cocycle
  delta(L_n) = (n*alpha + gamma)(I_0 (x) I_n - I_n (x) I_0),
  delta(I_n) = beta (I_0 (x) I_n - I_n (x) I_0).

The cobracket of the dual coalgebra itself (Delta of a single eps) is an
infinite formal sum and is never materialized; only coefficient queries
(``dual_cobracket_coeff``) and pairing evaluations are exposed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterator, Mapping

from .core import (
    CENTERLESS,
    BasisIndex,
    DegenerateFamilyError,
    Element,
    ModeError,
    Rat,
    Sector,
    UsageError,
    WindowTooSmallError,
    as_fraction,
    bracket,
    I,
    L,
)
from .cobracket import CobracketSpec, CoboundarySpec, HVDeltaSpec
from .tensors import Tensor2
from .ybe import alternating_r

__all__ = [
    "DualSector",
    "DualIndex",
    "DualElement",
    "EV",
    "EW",
    "pair",
    "pair_basis",
    "pair2",
    "primal_basis",
    "parse_dual_index",
    "DualBracketFamily",
    "FAMILY_TAGS",
    "family_cobracket",
    "dual_bracket_closed",
    "dual_bracket_element",
    "dual_bracket_oracle",
    "dual_cobracket_coeff",
    "dual_cobracket_oracle",
    "dual_cobracket_coeff_from_coproduct",
    "partial_star",
    "mu_coproduct_coeff",
]


class DualSector(enum.IntEnum):
    """First-copy (EV) and second-copy (EW) dual sectors, EV < EW."""

    EV = 0
    EW = 1


EV = DualSector.EV
EW = DualSector.EW


@dataclass(frozen=True)
class DualIndex:
    sector: DualSector
    degree: int

    def sort_key(self) -> tuple[int, int]:
        return (int(self.sector), self.degree)

    def label(self) -> str:
        return f"eps({'V' if self.sector is EV else 'W'},{self.degree})"

    def __repr__(self) -> str:
        return self.label()


def parse_dual_index(text: str) -> DualIndex:
    """Parse 'V,3' / 'W,-2' (case-insensitive, optional spaces)."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise UsageError(f"dual index must be 'V,<int>' or 'W,<int>', got {text!r}")
    sector_text, degree_text = parts
    sector = {"V": EV, "W": EW}.get(sector_text.upper())
    if sector is None:
        raise UsageError(f"unknown dual sector {sector_text!r}")
    try:
        degree = int(degree_text)
    except ValueError:
        raise UsageError(f"bad dual degree {degree_text!r}") from None
    return DualIndex(sector, degree)


def primal_basis(idx: DualIndex) -> BasisIndex:
    """The basis generator a dual index pairs with: (EV,p) <-> V_p, (EW,q) <-> W_q."""
    if idx.sector is EV:
        return BasisIndex.v(idx.degree)
    return BasisIndex.w(idx.degree)


class DualElement:
    """Finite linear combination of dual basis vectors, canonical form."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[DualIndex, Rat] | None = None):
        clean: dict[DualIndex, Fraction] = {}
        if terms:
            for idx, coeff in terms.items():
                c = as_fraction(coeff)
                if c:
                    clean[idx] = c
        object.__setattr__(self, "_terms", clean)

    @classmethod
    def unit(cls, idx: DualIndex) -> "DualElement":
        return cls({idx: 1})

    @property
    def terms(self) -> Mapping[DualIndex, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, idx: DualIndex) -> Fraction:
        return self._terms.get(idx, Fraction(0))

    def sorted_terms(self) -> list[tuple[DualIndex, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def __iter__(self) -> Iterator[tuple[DualIndex, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "DualElement") -> "DualElement":
        if not isinstance(other, DualElement):
            return NotImplemented
        acc = dict(self._terms)
        for idx, coeff in other._terms.items():
            acc[idx] = acc.get(idx, Fraction(0)) + coeff
        return DualElement(acc)

    def __sub__(self, other: "DualElement") -> "DualElement":
        if not isinstance(other, DualElement):
            return NotImplemented
        acc = dict(self._terms)
        for idx, coeff in other._terms.items():
            acc[idx] = acc.get(idx, Fraction(0)) - coeff
        return DualElement(acc)

    def __neg__(self) -> "DualElement":
        return DualElement({i: -c for i, c in self._terms.items()})

    def __rmul__(self, scalar: Rat) -> "DualElement":
        c = as_fraction(scalar)
        return DualElement({i: c * v for i, v in self._terms.items()})

    __mul__ = __rmul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DualElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        from .exprs import format_dual_element

        return format_dual_element(self)


def pair_basis(f: DualElement, basis: BasisIndex) -> Fraction:
    """<f, basis generator>; zero across sectors, delta on degrees."""
    if basis.is_central:
        raise ModeError("the dual basis pairs only with the centerless algebra")
    sector = EV if basis.sector is Sector.V else EW
    return f.coefficient(DualIndex(sector, basis.degree))


def pair(f: DualElement, v: Element) -> Fraction:
    """The bilinear pairing <f, v>; v must be central-free."""
    total = Fraction(0)
    for basis, coeff in v:
        total += coeff * pair_basis(f, basis)
    return total


def pair2(f: DualElement, g: DualElement, t: Tensor2) -> Fraction:
    """Slotwise product pairing <f (x) g, t>; t must be central-free."""
    if t.has_central():
        raise ModeError("the dual basis pairs only with the centerless algebra")
    total = Fraction(0)
    for (b1, b2), coeff in t:
        left = pair_basis(f, b1)
        if not left:
            continue
        right = pair_basis(g, b2)
        if right:
            total += coeff * left * right
    return total


FAMILY_TAGS = ("T42", "T43", "T44a", "T44b", "T45")


@dataclass(frozen=True)
class DualBracketFamily:
    """One of the five closed-form dual bracket families (tag + parameters)."""

    tag: str
    m: int | None = None
    q: Fraction | None = None
    alpha: Fraction | None = None
    beta: Fraction | None = None
    gamma: Fraction | None = None

    def __post_init__(self) -> None:
        if self.tag not in FAMILY_TAGS:
            raise UsageError(f"unknown family tag {self.tag!r}")
        if self.tag == "T42":
            if self.m is None:
                raise UsageError("T42 requires m")
            if self.m == 0:
                raise DegenerateFamilyError("T42 with m=0: r vanishes identically")
        elif self.tag in ("T43", "T44a", "T44b"):
            if self.m is None or self.q is None:
                raise UsageError(f"{self.tag} requires m and q")
        else:  # T45
            if self.alpha is None or self.beta is None or self.gamma is None:
                raise UsageError("T45 requires alpha, beta, gamma")

    @classmethod
    def t42(cls, m: int) -> "DualBracketFamily":
        return cls("T42", m=m)

    @classmethod
    def t43(cls, m: int, q: Rat) -> "DualBracketFamily":
        return cls("T43", m=m, q=as_fraction(q))

    @classmethod
    def t44a(cls, m: int, q: Rat) -> "DualBracketFamily":
        return cls("T44a", m=m, q=as_fraction(q))

    @classmethod
    def t44b(cls, m: int, q: Rat) -> "DualBracketFamily":
        return cls("T44b", m=m, q=as_fraction(q))

    @classmethod
    def t45(cls, alpha: Rat, beta: Rat, gamma: Rat) -> "DualBracketFamily":
        return cls(
            "T45",
            alpha=as_fraction(alpha),
            beta=as_fraction(beta),
            gamma=as_fraction(gamma),
        )

    @classmethod
    def from_params(cls, tag: str, params: Mapping[str, str]) -> "DualBracketFamily":
        """Build from string parameters as they arrive over the wire/CLI."""
        if tag == "T42":
            return cls.t42(int(params["m"]))
        if tag in ("T43", "T44a", "T44b"):
            ctor = {"T43": cls.t43, "T44a": cls.t44a, "T44b": cls.t44b}[tag]
            return ctor(int(params["m"]), Fraction(params["q"]))
        if tag == "T45":
            return cls.t45(
                Fraction(params["alpha"]),
                Fraction(params["beta"]),
                Fraction(params["gamma"]),
            )
        raise UsageError(f"unknown family tag {tag!r}")

    def describe(self) -> str:
        from .exprs import format_rational

        if self.tag == "T42":
            return f"T42(m={self.m})"
        if self.tag in ("T43", "T44a", "T44b"):
            return f"{self.tag}(m={self.m},q={format_rational(self.q)})"
        return (
            f"T45(alpha={format_rational(self.alpha)},"
            f"beta={format_rational(self.beta)},gamma={format_rational(self.gamma)})"
        )


def family_cobracket(family: DualBracketFamily) -> CobracketSpec:
    """The primal cobracket whose dualization the family's bracket is."""
    if family.tag == "T42":
        return CoboundarySpec(alternating_r(L(0), L(family.m)))
    if family.tag == "T43":
        return CoboundarySpec(
            alternating_r(L(0), L(family.m) + family.q * I(family.m))
        )
    if family.tag == "T44a":
        return CoboundarySpec(alternating_r(L(0), L(0) + family.q * I(family.m)))
    if family.tag == "T44b":
        return CoboundarySpec(alternating_r(L(0), family.q * I(family.m)))
    return HVDeltaSpec(family.alpha, family.beta, family.gamma)


def _closed_terms(
    family: DualBracketFamily, si: DualSector, di: int, sj: DualSector, dj: int
) -> list[tuple[DualSector, int, Fraction]]:
    """Raw closed-form bracket terms for basis dual indices, as (sector,
    degree, coefficient) triples; coefficients may be zero and are dropped by
    the callers' canonicalization.

    Each family implements the total display formula valid for all (i, j);
    the case tables usually quoted for them are consequences.
    """
    if si is EW and sj is EV:
        return [(s, d, -c) for s, d, c in _closed_terms(family, sj, dj, si, di)]
    tag = family.tag
    out: list[tuple[DualSector, int, Fraction]] = []
    if tag in ("T42", "T43"):
        m = family.m
        if si is EV and sj is EV:
            if dj == m + 1:
                out.append((EV, di, Fraction(1 - di)))
            if di == 1:
                out.append((EV, dj - m, Fraction(2 * m + 1 - dj)))
            if di == m + 1:
                out.append((EV, dj, Fraction(dj - 1)))
            if dj == 1:
                out.append((EV, di - m, Fraction(-(2 * m + 1 - di))))
            return out
        if si is EV and sj is EW:
            if tag == "T42":
                if di == 1:
                    out.append((EW, dj - m, Fraction(m - dj)))
                if di == m + 1:
                    out.append((EW, dj, Fraction(dj)))
                return out
            q = family.q
            if dj == m:
                out.append((EV, di, (1 - di) * q))
            if di == 1:
                out.append((EV, dj - m + 1, m * q))
                out.append((EW, dj - m, Fraction(-(dj - m))))
            if di == m + 1:
                out.append((EW, dj, Fraction(dj)))
            return out
        # EW, EW
        if tag == "T42":
            return out
        q = family.q
        m = family.m
        if di == m:
            out.append((EW, dj, dj * q))
        if dj == m:
            out.append((EW, di, -di * q))
        return out
    if tag in ("T44a", "T44b"):
        m, q = family.m, family.q
        if si is EV and sj is EV:
            return out
        if si is EV and sj is EW:
            if dj == m:
                out.append((EV, di, (1 - di) * q))
            if di == 1:
                out.append((EV, dj - m + 1, m * q))
            return out
        if di == m:
            out.append((EW, dj, dj * q))
        if dj == m:
            out.append((EW, di, -di * q))
        return out
    # T45
    alpha, beta, gamma = family.alpha, family.beta, family.gamma
    if si is EW and sj is EW:
        if di == 0:
            out.append((EV, dj + 1, dj * alpha + gamma))
            out.append((EW, dj, beta))
        if dj == 0:
            out.append((EV, di + 1, -(di * alpha + gamma)))
            out.append((EW, di, -beta))
    return out


def dual_bracket_closed(
    family: DualBracketFamily, i: DualIndex, j: DualIndex
) -> DualElement:
    """Closed-form dual bracket [eps_i, eps_j] for basis dual indices."""
    acc: dict[DualIndex, Fraction] = {}
    for sector, degree, coeff in _closed_terms(family, i.sector, i.degree, j.sector, j.degree):
        if coeff:
            idx = DualIndex(sector, degree)
            acc[idx] = acc.get(idx, Fraction(0)) + coeff
    return DualElement(acc)


def dual_bracket_element(
    family: DualBracketFamily, f: DualElement, g: DualElement
) -> DualElement:
    """Bilinear extension of the closed-form bracket to dual elements."""
    acc: dict[DualIndex, Fraction] = {}
    for fi, cf in f:
        for gj, cg in g:
            scale = cf * cg
            for sector, degree, coeff in _closed_terms(
                family, fi.sector, fi.degree, gj.sector, gj.degree
            ):
                if coeff:
                    idx = DualIndex(sector, degree)
                    acc[idx] = acc.get(idx, Fraction(0)) + scale * coeff
    return DualElement(acc)


@lru_cache(maxsize=512)
def _window_cobrackets(
    family: DualBracketFamily, window: int
) -> tuple[tuple[DualIndex, Tensor2], ...]:
    """Delta(xi) for every basis xi = V_k, W_k with |k| <= window."""
    spec = family_cobracket(family)
    entries: list[tuple[DualIndex, Tensor2]] = []
    for k in range(-window, window + 1):
        entries.append((DualIndex(EV, k), spec.apply(Element({BasisIndex.v(k): 1}))))
        entries.append((DualIndex(EW, k), spec.apply(Element({BasisIndex.w(k): 1}))))
    return tuple(entries)


def dual_bracket_oracle(
    family: DualBracketFamily, f: DualElement, g: DualElement, window: int
) -> DualElement:
    """Reconstruct [f, g] from the pairing <[f,g], xi> = <f (x) g, Delta(xi)>.

    Evaluates against all basis xi with |degree| <= window and refuses the
    window (WindowTooSmallError) if any coefficient in the two outermost
    degree bands is nonzero, since the support might then be truncated.
    """
    if window < 2:
        raise WindowTooSmallError("oracle window must be at least 2")
    acc: dict[DualIndex, Fraction] = {}
    f_items = list(f)
    g_items = list(g)
    if len(f_items) == 1 and len(g_items) == 1:
        # single dual-basis factors: each pairing is one tensor lookup
        (fi, cf), (gj, cg) = f_items[0], g_items[0]
        key = (primal_basis(fi), primal_basis(gj))
        scale = cf * cg
        for target, delta in _window_cobrackets(family, window):
            value = delta.coefficient(key)
            if value:
                acc[target] = scale * value
    else:
        for target, delta in _window_cobrackets(family, window):
            value = pair2(f, g, delta)
            if value:
                acc[target] = value
    for idx in acc:
        if abs(idx.degree) >= window - 1:
            raise WindowTooSmallError(
                f"nonzero coefficient at boundary degree {idx.degree} "
                f"(window {window}); enlarge the window"
            )
    return DualElement(acc)


def dual_cobracket_coeff(
    sector: DualSector, m: int, i: DualIndex, j: DualIndex
) -> Fraction:
    """Coefficient of eps_i (x) eps_j in the dual-coalgebra cobracket of the
    degree-m dual vector of the given sector.

    First copy:  Delta (eps^m, 0) = sum_{i+j=m+1} (j - i) (eps^i,0)(x)(eps^j,0).
    Second copy: Delta (0, eps^m) = sum_{i+j=m+1} j (eps^i,0)(x)(0,eps^j)
                                              - i (0,eps^i)(x)(eps^j,0).
    """
    if i.degree + j.degree != m + 1:
        return Fraction(0)
    if sector is EV:
        if i.sector is EV and j.sector is EV:
            return Fraction(j.degree - i.degree)
        return Fraction(0)
    if i.sector is EV and j.sector is EW:
        return Fraction(j.degree)
    if i.sector is EW and j.sector is EV:
        return Fraction(-i.degree)
    return Fraction(0)


def dual_cobracket_oracle(
    sector: DualSector, m: int, bi: BasisIndex, bj: BasisIndex
) -> Fraction:
    """Ground truth for the same coefficient via <eps, [bi, bj]>."""
    eps = DualElement.unit(DualIndex(sector, m))
    return pair(eps, bracket(Element({bi: 1}), Element({bj: 1}), CENTERLESS))


def partial_star(m: int, sector: DualSector = EV) -> DualElement:
    """Dual of d/dx on the eps basis: eps^m -> (m+1) eps^{m+1}."""
    return DualElement({DualIndex(sector, m + 1): Fraction(m + 1)})


def mu_coproduct_coeff(m: int, i: int, j: int) -> Fraction:
    """Coefficient of eps^i (x) eps^j in the coproduct dual to Laurent
    multiplication: 1 exactly when i + j = m."""
    return Fraction(1) if i + j == m else Fraction(0)


def dual_cobracket_coeff_from_coproduct(
    sector: DualSector, m: int, i: DualIndex, j: DualIndex
) -> Fraction:
    """Recompute dual_cobracket_coeff from the coproduct and partial_star.

    First copy:   sum_{a+b=m} delta_{i,a} ps(b)[j] - ps(a)[i] delta_{j,b}
    Second copy:  the same with the derivative acting in the W slot.
    Only finitely many (a, b) contribute for fixed (i, j).
    """
    total = Fraction(0)
    if sector is EV:
        if i.sector is EV and j.sector is EV:
            # a = i.degree term
            b = m - i.degree
            total += mu_coproduct_coeff(m, i.degree, b) * partial_star(b).coefficient(
                DualIndex(EV, j.degree)
            )
            a = m - j.degree
            total -= partial_star(a).coefficient(
                DualIndex(EV, i.degree)
            ) * mu_coproduct_coeff(m, a, j.degree)
        return total
    if i.sector is EV and j.sector is EW:
        b = m - i.degree
        total += mu_coproduct_coeff(m, i.degree, b) * partial_star(b, EW).coefficient(
            DualIndex(EW, j.degree)
        )
        return total
    if i.sector is EW and j.sector is EV:
        a = m - j.degree
        total -= partial_star(a, EW).coefficient(
            DualIndex(EW, i.degree)
        ) * mu_coproduct_coeff(m, a, j.degree)
        return total
    return total
