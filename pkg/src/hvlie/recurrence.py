"""Two-sided linearly recursive functionals and windowed translate ranks.

A functional f = sum f_n eps^n on a Laurent polynomial copy belongs to the
maximal good subspace exactly when its coefficient sequence satisfies a fixed
linear recurrence  f_n = c_1 f_{n-1} + ... + c_r f_{n-r}  for all integer n.
Requiring c_r != 0 makes the recurrence runnable in both directions
(backward step:  f_{n-r} = (f_n - sum_{j<r} c_j f_{n-j}) / c_r), so
evaluation is total over Z.

A functional on the full two-copy algebra is a pair (first copy, second
copy).  Translate ranks are windowed shadows of the finite-dimensionality
criterion: shifts f_{n+k} for the multiplicative action, and the sampled Lie
translates (f * w)(v) = f([w, v]) for a list of generators w.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    BasisIndex,
    Element,
    ModeError,
    Rat,
    Sector,
    UsageError,
    WindowTooSmallError,
    as_fraction,
    bracket,
)

__all__ = [
    "RecurrenceFunctional",
    "recurrence_eval",
    "translate_rank_mu",
    "translate_rank_lie",
    "rational_rank",
    "fibonacci_functional",
    "constant_functional",
    "zero_functional",
]


@dataclass(frozen=True)
class RecurrenceFunctional:
    """f_n = c_1 f_{n-1} + ... + c_r f_{n-r} with seed f_{n0}..f_{n0+r-1}."""

    coeffs: tuple[Fraction, ...]
    anchor: int
    seed: tuple[Fraction, ...]
    sector: str = "first"

    def __init__(
        self,
        coeffs: Sequence[Rat],
        anchor: int,
        seed: Sequence[Rat],
        sector: str = "first",
    ):
        cs = tuple(as_fraction(c) for c in coeffs)
        ss = tuple(as_fraction(s) for s in seed)
        if not cs:
            raise UsageError("recurrence needs at least one coefficient")
        if cs[-1] == 0:
            raise UsageError("trailing coefficient c_r must be nonzero")
        if len(ss) != len(cs):
            raise UsageError("seed length must equal the recurrence order")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "anchor", anchor)
        object.__setattr__(self, "seed", ss)
        if sector not in ("first", "second"):
            raise UsageError("sector must be 'first' or 'second'")
        object.__setattr__(self, "sector", sector)

    @property
    def order(self) -> int:
        return len(self.coeffs)


def recurrence_eval(rf: RecurrenceFunctional, n: int) -> Fraction:
    """f_n by seed lookup, forward recursion, or backward recursion."""
    r = rf.order
    lo = rf.anchor
    hi = rf.anchor + r - 1
    if lo <= n <= hi:
        return rf.seed[n - lo]
    if n > hi:
        window = list(rf.seed)
        for _ in range(hi + 1, n + 1):
            nxt = sum(rf.coeffs[j] * window[-1 - j] for j in range(r))
            window.append(nxt)
            window.pop(0)
        return window[-1]
    # n < lo: solve f_{k-r} from the relation at k, stepping k downward
    window = list(rf.seed)
    for k in range(hi, n + r - 1, -1):
        head = window[-1]
        rest = sum(rf.coeffs[j] * window[-2 - j] for j in range(r - 1))
        prev = (head - rest) / rf.coeffs[-1]
        window.insert(0, prev)
        window.pop()
    return window[0]


def rational_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank over Q by fraction-free-enough Gaussian elimination."""
    matrix = [list(row) for row in rows if any(row)]
    if not matrix:
        return 0
    cols = len(matrix[0])
    rank = 0
    col = 0
    while rank < len(matrix) and col < cols:
        pivot_row = next(
            (r for r in range(rank, len(matrix)) if matrix[r][col]), None
        )
        if pivot_row is None:
            col += 1
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pivot = matrix[rank][col]
        for r in range(rank + 1, len(matrix)):
            factor = matrix[r][col]
            if factor:
                scale = factor / pivot
                row = matrix[r]
                base = matrix[rank]
                for c in range(col, cols):
                    row[c] -= scale * base[c]
        rank += 1
        col += 1
    return rank


def translate_rank_mu(rf: RecurrenceFunctional, window: int) -> int:
    """Rank of the shift matrix rows (f_{n+k})_{|n|<=window} for |k| <= window.

    Bounded above by the recurrence order for every window.
    """
    if window < rf.order + 2:
        raise WindowTooSmallError(
            f"window {window} too small for order {rf.order} (need >= order + 2)"
        )
    rows = [
        [recurrence_eval(rf, n + k) for n in range(-window, window + 1)]
        for k in range(-window, window + 1)
    ]
    return rational_rank(rows)


def _pair_eval(
    first: RecurrenceFunctional, second: RecurrenceFunctional, e: Element
) -> Fraction:
    """Evaluate the two-sector functional on an element: f(V_p) comes from the
    first sequence at p, f(W_q) from the second at q."""
    total = Fraction(0)
    for basis, coeff in e:
        if basis.sector is Sector.V:
            total += coeff * recurrence_eval(first, basis.degree)
        elif basis.sector is Sector.W:
            total += coeff * recurrence_eval(second, basis.degree)
        else:
            raise ModeError("recurrence functionals act on the centerless algebra")
    return total


def translate_rank_lie(
    rf_pair: tuple[RecurrenceFunctional, RecurrenceFunctional],
    generators: Sequence[BasisIndex],
    window: int,
) -> int:
    """Rank of the sampled Lie-translate matrix: one row per generator w,
    columns (f * w)(V_n), (f * w)(W_n) over |n| <= window, where
    (f * w)(v) = f([w, v])."""
    first, second = rf_pair
    min_window = max(first.order, second.order) + 2
    if window < min_window:
        raise WindowTooSmallError(
            f"window {window} too small (need >= {min_window})"
        )
    rows: list[list[Fraction]] = []
    for gen in generators:
        if gen.is_central:
            raise ModeError("generators must be central-free")
        w = Element({gen: 1})
        row: list[Fraction] = []
        for n in range(-window, window + 1):
            row.append(_pair_eval(first, second, bracket(w, Element({BasisIndex.v(n): 1}))))
        for n in range(-window, window + 1):
            row.append(_pair_eval(first, second, bracket(w, Element({BasisIndex.w(n): 1}))))
        rows.append(row)
    return rational_rank(rows)


def fibonacci_functional(sector: str = "first") -> RecurrenceFunctional:
    """f_0 = 0, f_1 = 1, f_n = f_{n-1} + f_{n-2}."""
    return RecurrenceFunctional((1, 1), 0, (0, 1), sector)


def constant_functional(value: Rat = 1, sector: str = "first") -> RecurrenceFunctional:
    """f_n = value for all n (order 1, c_1 = 1)."""
    return RecurrenceFunctional((1,), 0, (value,), sector)


def zero_functional(sector: str = "first") -> RecurrenceFunctional:
    """The zero functional, represented with order 1 and zero seed."""
    return RecurrenceFunctional((1,), 0, (0,), sector)
