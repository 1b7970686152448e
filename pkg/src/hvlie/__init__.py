"""hvlie: exact-arithmetic engine for the twisted Heisenberg-Virasoro algebra.

Core functionality: the centerless and centrally extended Lie bracket over
exact rationals, finite tensors with the adjoint action, classical
Yang-Baxter defects, coboundary and non-coboundary cobrackets, the dual
Lie bialgebra brackets with a pairing oracle, two-sided linearly recursive
functionals, and a windowed verification harness.  A FastAPI service and a
thin CLI sit on top.
"""

from .cobracket import (
    CobracketSpec,
    CoboundarySpec,
    HVDeltaSpec,
    SumSpec,
    apply_cobracket,
    cocycle_defect,
    cojacobi_defect,
    skew_defect,
)
from .core import (
    CENTERLESS,
    CENTRAL,
    CI,
    CL,
    CLI,
    BasisIndex,
    DegenerateFamilyError,
    Element,
    I,
    L,
    ModeError,
    Sector,
    UsageError,
    WindowTooSmallError,
    bracket,
    combine,
    lie_generators,
    make_generator,
)
from .dual import (
    EV,
    EW,
    DualBracketFamily,
    DualElement,
    DualIndex,
    DualSector,
    dual_bracket_closed,
    dual_bracket_element,
    dual_bracket_oracle,
    dual_cobracket_coeff,
    dual_cobracket_oracle,
    family_cobracket,
    mu_coproduct_coeff,
    pair,
    pair2,
    partial_star,
)
from .exprs import (
    ParseError,
    format_dual_element,
    format_element,
    format_rational,
    format_tensor,
    parse_element,
)
from .recurrence import (
    RecurrenceFunctional,
    recurrence_eval,
    translate_rank_lie,
    translate_rank_mu,
)
from .tensors import Tensor2, Tensor3, adjoint_action, cyclic_rotate, flip_tau, tensor_of
from .verify import CHECK_IDS, CheckReport, format_report, run_all, run_check
from .ybe import (
    RSpec,
    alternating_r,
    classify_cybe,
    cybe_defect,
    cybe_predicted_zero,
    hv_r_family,
)

__all__ = [name for name in dir() if not name.startswith("_")]
