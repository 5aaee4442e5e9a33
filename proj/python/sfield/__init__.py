"""Exact pair-model arithmetic with a well-defined division by zero.

The carrier is S = R x R over an exact coefficient ring R (rationals, GF(p)
or the integers).  Addition is componentwise; the product

    (x, y) * (u, v) = (x*u + y + v - x*v - y*u,  y*v + x*v + y*u)

keeps addition a commutative group while zero stops annihilating:
0 * (x, y) = (y, 0).  That single change makes alpha/0 = (0, alpha) a
well-defined, injective operation for every nonzero scalar alpha, with 0/0
left indeterminate.  ``run_full_suite(p)`` brute-force checks every
structural law on the finite instance GF(p) x GF(p).
"""

from ._core import (
    AxiomReport,
    BackendMismatch,
    CheckResult,
    ConstructionError,
    Context,
    Decomposition,
    DivisionOutcome,
    DivisionStatus,
    EvalError,
    IndeterminateDivision,
    LexError,
    NotAScalar,
    NotInvertible,
    ParseError,
    Scalar,
    SElement,
    SFieldError,
    Verdict,
    compose,
    decompose,
    div_by_scalar,
    div_by_zero,
    divide,
    embed_scalar,
    evaluate,
    extract_scalar,
    is_reversible,
    render,
    run_full_suite,
    scalar_mul,
    standard_base,
    verify_quotient,
)

__all__ = [
    "AxiomReport",
    "BackendMismatch",
    "CheckResult",
    "ConstructionError",
    "Context",
    "Decomposition",
    "DivisionOutcome",
    "DivisionStatus",
    "EvalError",
    "IndeterminateDivision",
    "LexError",
    "NotAScalar",
    "NotInvertible",
    "ParseError",
    "Scalar",
    "SElement",
    "SFieldError",
    "Verdict",
    "compose",
    "decompose",
    "div_by_scalar",
    "div_by_zero",
    "divide",
    "embed_scalar",
    "evaluate",
    "extract_scalar",
    "is_reversible",
    "render",
    "run_full_suite",
    "scalar_mul",
    "standard_base",
    "verify_quotient",
]
