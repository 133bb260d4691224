"""Exact Motzkin-triangle identities via the constant-term method."""

from .laurent import LaurentPolynomial, add, coefficient, constant_term, mul, power, substitute_reciprocal
from .triangles import (
    TriangleSpec,
    binomial,
    binomial_formula,
    catalan_variant,
    extended_T,
    general_A,
    motzkin_T,
    T_via_ct,
    trinomial,
)
from .identities import (
    ArithmeticFault,
    VerificationReport,
    conjecture_sum,
    general_identity_check,
    lhs_problem,
    pascal_analogy_check,
    rhs_problem,
    term_bridge,
    theorem1_check,
    theorem2_check,
    theorem2_lhs,
)
from .cores import (
    CoprimalityError,
    Partition,
    conjecture_check,
    count_simultaneous_cores,
    hook_lengths,
    is_core,
)

__version__ = "0.1.0"
