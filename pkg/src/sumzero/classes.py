"""Class polynomials of configuration spaces and their virtual Poincaré polynomials.

``class_fn(n)`` is the class of the ordered configuration space F_n(X) as a
polynomial in [X]; ``class_fn0(n)`` is the class of the sum-zero locus
F_n^0(E) on an elliptic curve as a polynomial in [E].  Substituting a virtual
Poincaré polynomial S(X) for the class variable gives S of the space.
"""

import enum
import math
from dataclasses import dataclass

from .errors import VariableMismatchError
from .partitions import shape_multiplicity, shapes_of
from .poly import IntPoly
from .stirling import DEFAULT_N_MAX, get_table


class Space(enum.Enum):
    FN = "fn"
    FN0 = "fn0"


# Betti numbers 1, 2, 1 of a smooth projective genus-one curve
S_ELLIPTIC = IntPoly((1, 2, 1), "x")
# Betti numbers 1, 0, 1 of the projective line
S_PROJECTIVE_LINE = IntPoly((1, 0, 1), "x")


@dataclass(frozen=True)
class ClassPolynomial:
    poly: IntPoly
    n: int
    space: Space

    def __str__(self):
        return str(self.poly)


def _sign(n, k):
    return -1 if (n - k) % 2 else 1


def class_fn(n: int, n_max: int = DEFAULT_N_MAX) -> ClassPolynomial:
    """sum_{k>=1} (-1)^(n-k) s(n,k) X^k; the n = 0 case is the constant 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    table = get_table(n_max)
    coeffs = [_sign(n, k) * table.s(n, k) for k in range(n + 1)]
    return ClassPolynomial(IntPoly(coeffs, "X"), n, Space.FN)


def class_fn0(n: int, n_max: int = DEFAULT_N_MAX) -> ClassPolynomial:
    """sum_{k>=1} (-1)^(n-k) s_m(n,k) E^(k-1); the n = 0 case is the constant 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    table = get_table(n_max)
    if n == 0:
        table.s_m(0, 0)  # still enforces n_max
        return ClassPolynomial(IntPoly((1,), "E"), 0, Space.FN0)
    coeffs = [_sign(n, k) * table.s_m(n, k) for k in range(1, n + 1)]
    return ClassPolynomial(IntPoly(coeffs, "E"), n, Space.FN0)


def class_polynomial(space: Space, n: int, n_max: int = DEFAULT_N_MAX) -> ClassPolynomial:
    space = Space(space)
    return class_fn(n, n_max) if space is Space.FN else class_fn0(n, n_max)


def class_fn_by_inclusion_exclusion(n: int) -> IntPoly:
    """Assemble [F_n(X)] from the diagonal strata directly.

    Each set partition contributes mu(0, sigma) [X]^l(sigma); partitions are
    grouped by shape so the sum runs over integer partitions of n.
    """
    out = [0] * (n + 1)
    for shape in shapes_of(n):
        mu = _sign(n, shape.length)
        for p in shape.parts:
            mu *= math.factorial(p - 1)
        out[shape.length] += shape_multiplicity(shape) * mu
    return IntPoly(out, "X")


def virtual_poincare(c: ClassPolynomial, sx: IntPoly) -> IntPoly:
    """Substitute ``sx`` (a polynomial in ``x``) for the class variable."""
    if sx.var != "x":
        raise VariableMismatchError(f"S(X) must be a polynomial in 'x', got {sx.var!r}")
    return c.poly.compose(sx)


def render(poly: IntPoly, fmt: str) -> str:
    """Render one polynomial as ``plain``, ``latex`` or ``json`` text."""
    if fmt == "plain":
        return poly.to_plain()
    if fmt == "latex":
        return poly.to_latex()
    if fmt == "json":
        return poly.to_json()
    raise ValueError(f"unknown format {fmt!r}")


def table_rows(space, n_from: int, n_to: int, fmt: str = "plain", n_max: int = DEFAULT_N_MAX) -> list:
    """Rendered class polynomials for n_from <= n <= n_to.

    Both spaces are printed in the variable ``E``, matching the published
    tables of F_n(E) and F_n^0(E).
    """
    space = Space(space)
    if not 1 <= n_from <= n_to <= n_max:
        raise ValueError(f"need 1 <= n_from <= n_to <= {n_max}, got {n_from}..{n_to}")
    return [render(class_polynomial(space, n, n_max).poly.with_var("E"), fmt) for n in range(n_from, n_to + 1)]

