"""Candidate r-matrices and the exact classical Yang-Baxter defect.

For r = sum r1_a (x) r2_a in L(x)L the defect

    C(r) = [r_12, r_13] + [r_12, r_23] + [r_13, r_23]

is computed slotwise in L(x)L(x)L with centerless brackets:

    [r_12, r_13] = sum [r1_a, r1_b] (x) r2_a (x) r2_b
    [r_12, r_23] = sum r1_a (x) [r2_a, r1_b] (x) r2_b
    [r_13, r_23] = sum r1_a (x) r1_b (x) [r2_a, r2_b]

The two-parameter family  r = L(0) (x) (L(m) + q I(n)) - (L(m) + q I(n)) (x) L(0)
is a CYBE solution exactly when m = n, m = 0, or q = 0; the scan checks that
predicate against brute force on every triple and surfaces any mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import CENTERLESS, Element, ModeError, Rat, as_fraction, L, I
from .tensors import Tensor2, Tensor3, tensor_of
from .core import bracket_basis
from .exprs import format_rational

__all__ = [
    "RSpec",
    "ScanRow",
    "alternating_r",
    "hv_r_family",
    "cybe_defect",
    "cybe_predicted_zero",
    "classify_cybe",
    "format_scan_row",
]


@dataclass(frozen=True)
class RSpec:
    """An alternating r-matrix r = a (x) b - b (x) a; a, b central-free."""

    a: Element
    b: Element

    def __post_init__(self) -> None:
        if self.a.has_central() or self.b.has_central():
            raise ModeError("r-matrix factors must be central-free")

    def tensor(self) -> Tensor2:
        return alternating_r(self.a, self.b)


def alternating_r(a: Element, b: Element) -> Tensor2:
    """a (x) b - b (x) a; lies in Im(1 - tau) by construction."""
    if a.has_central() or b.has_central():
        raise ModeError("r-matrix factors must be central-free")
    return tensor_of(a, b) - tensor_of(b, a)


def hv_r_family(m: int, n: int, q: Rat) -> Tensor2:
    """The scan family r = L(0) (x) (L(m) + q I(n)) - (L(m) + q I(n)) (x) L(0)."""
    second = L(m) + as_fraction(q) * I(n)
    return alternating_r(L(0), second)


def cybe_defect(r: Tensor2) -> Tensor3:
    """Classical Yang-Baxter defect C(r), slotwise with centerless brackets."""
    if r.has_central():
        raise ModeError("CYBE defect requires a central-free r")
    acc: dict = {}
    terms = list(r)
    for (a1, a2), ca in terms:
        for (b1, b2), cb in terms:
            scale = ca * cb
            for basis, coeff in bracket_basis(a1, b1, CENTERLESS):
                key = (basis, a2, b2)
                acc[key] = acc.get(key, Fraction(0)) + scale * coeff
            for basis, coeff in bracket_basis(a2, b1, CENTERLESS):
                key = (a1, basis, b2)
                acc[key] = acc.get(key, Fraction(0)) + scale * coeff
            for basis, coeff in bracket_basis(a2, b2, CENTERLESS):
                key = (a1, b1, basis)
                acc[key] = acc.get(key, Fraction(0)) + scale * coeff
    return Tensor3(acc)


def cybe_predicted_zero(m: int, n: int, q: Fraction) -> bool:
    """Closed-form solution predicate for the scan family."""
    return m == n or m == 0 or q == 0


@dataclass(frozen=True)
class ScanRow:
    m: int
    n: int
    q: Fraction
    is_solution: bool
    predicted: bool

    @property
    def agree(self) -> bool:
        return self.is_solution == self.predicted


def classify_cybe(
    m_range: tuple[int, int],
    n_range: tuple[int, int],
    q_list: Sequence[Rat],
) -> list[ScanRow]:
    """Scan the family over integer intervals and a rational q list.

    Rows are ordered lexicographically by (m, n, q-list position) so the
    output is deterministic regardless of evaluation schedule.
    """
    m_lo, m_hi = m_range
    n_lo, n_hi = n_range
    if m_lo > m_hi or n_lo > n_hi:
        raise ValueError("empty scan range")
    qs = [as_fraction(q) for q in q_list]
    if not qs:
        raise ValueError("empty q list")
    rows: list[ScanRow] = []
    for m in range(m_lo, m_hi + 1):
        for n in range(n_lo, n_hi + 1):
            for q in qs:
                zero = cybe_defect(hv_r_family(m, n, q)).is_zero()
                rows.append(ScanRow(m, n, q, zero, cybe_predicted_zero(m, n, q)))
    return rows


def format_scan_row(row: ScanRow) -> str:
    return (
        f"m={row.m} n={row.n} q={format_rational(row.q)} "
        f"cybe={'ZERO' if row.is_solution else 'NONZERO'} "
        f"predicted={'ZERO' if row.predicted else 'NONZERO'} "
        f"agree={'YES' if row.agree else 'NO'}"
    )
