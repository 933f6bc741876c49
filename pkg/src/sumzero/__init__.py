"""Exact class polynomials of configuration spaces F_n(X) and of sum-zero
configurations F_n^0(E) on an elliptic curve, with brute-force cross-checks."""

from .classes import (
    S_ELLIPTIC,
    S_PROJECTIVE_LINE,
    ClassPolynomial,
    Space,
    class_fn,
    class_fn0,
    table_rows,
    virtual_poincare,
)
from .errors import (
    BudgetExceededError,
    OraclePreconditionError,
    ResourceLimitError,
    VariableMismatchError,
)
from .partitions import SetPartition, Shape, set_partitions, shape_gcd, shape_multiplicity, shapes_of
from .poly import IntPoly, poly_compose, poly_eval
from .stirling import (
    StirlingTable,
    burnside_multiset_check,
    rising_factorial,
    stirling_first,
    stirling_first_by_shapes,
    stirling_mod,
    stirling_mod_oracle,
)

__version__ = "0.1.0"
