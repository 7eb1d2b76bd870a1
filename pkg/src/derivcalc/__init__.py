"""derivcalc: exact symbolic calculus of derivations and differential
operators over the rational function field Q(t1, ..., tk).

The package provides exact field arithmetic, canonical operator normal
forms, the product-rule-defect order calculus, multiplicative difference
operators and exponent polynomials, grid reconstruction and finite-table
fitting of operators, a linear-recurrence checker, and desk-scale
counterexample fixtures, all exposed through the ``derivcalc`` CLI.
"""

from .exactnum import (
    BigRational,
    DimensionMismatchError,
    GF2Poly,
    MultiPoly,
    PoleError,
    RatFunc,
    evaluate,
    poly_gcd,
    ratfunc_normalize,
)
from .deriv import (
    Derivation,
    DiffOp,
    OpWord,
    apply_derivation,
    apply_diffop,
    compose,
    degree,
    normalize,
)
from .leibniz import (
    CheckResult,
    MapTable,
    NotInO0Error,
    defect,
    nested_defect,
    order_exact,
    order_upper_check,
)
from .genpoly import (
    ExpPoly,
    degree_bump,
    delta,
    exponent_polynomial,
    expoly_degree,
    gp_degree_check,
    over_identity,
)
from .reconstruct import (
    DegreeOverflowError,
    FitResult,
    GridValues,
    IncompleteGridError,
    RecurrenceSpec,
    check_recurrence,
    fit_operator,
    newton_coeffs,
    reconstruct_operator,
)
from .fixtures import (
    PairPoly,
    char2_D,
    char2_compose_check,
    char2_order_check,
    product_ring_demo,
    theorem2_demo,
)
from .cli import parse_derivation, parse_diffop, parse_expr, parse_word

__version__ = "0.1.0"

__all__ = [
    "BigRational",
    "CheckResult",
    "DegreeOverflowError",
    "Derivation",
    "DiffOp",
    "DimensionMismatchError",
    "ExpPoly",
    "FitResult",
    "GF2Poly",
    "GridValues",
    "IncompleteGridError",
    "MapTable",
    "MultiPoly",
    "NotInO0Error",
    "OpWord",
    "PairPoly",
    "PoleError",
    "RatFunc",
    "RecurrenceSpec",
    "apply_derivation",
    "apply_diffop",
    "char2_D",
    "char2_compose_check",
    "char2_order_check",
    "check_recurrence",
    "compose",
    "defect",
    "degree",
    "degree_bump",
    "delta",
    "evaluate",
    "exponent_polynomial",
    "expoly_degree",
    "fit_operator",
    "gp_degree_check",
    "nested_defect",
    "newton_coeffs",
    "normalize",
    "order_exact",
    "order_upper_check",
    "over_identity",
    "parse_derivation",
    "parse_diffop",
    "parse_expr",
    "parse_word",
    "poly_gcd",
    "product_ring_demo",
    "ratfunc_normalize",
    "reconstruct_operator",
    "theorem2_demo",
]
