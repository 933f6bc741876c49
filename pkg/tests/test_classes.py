import json

import pytest

from sumzero.classes import (
    S_ELLIPTIC,
    S_PROJECTIVE_LINE,
    Space,
    class_fn,
    class_fn0,
    class_fn_by_inclusion_exclusion,
    table_rows,
    virtual_poincare,
)
from sumzero.errors import VariableMismatchError
from sumzero.poly import IntPoly
from sumzero.reference import FN0_TABLE, FN_TABLE, normalize
from sumzero.stirling import stirling_first, stirling_mod

x = IntPoly.gen("x")


def test_class_fn_examples():
    assert class_fn(2).poly == IntPoly((0, -1, 1), "X")
    assert class_fn(1).poly == IntPoly.gen("X")
    assert class_fn(8).poly == IntPoly((0, -5040, 13068, -13132, 6769, -1960, 322, -28, 1), "X")
    assert class_fn(0).poly == IntPoly((1,), "X")


def test_class_fn0_examples():
    assert class_fn0(2).poly == IntPoly((-4, 1), "E")
    assert class_fn0(1).poly == IntPoly((1,), "E")
    assert class_fn0(7).poly == IntPoly((35280, -1764, 1624, -735, 175, -21, 1), "E")
    assert class_fn0(0).poly == IntPoly((1,), "E")


@pytest.mark.parametrize("n", range(2, 9))
def test_published_tables(n):
    assert class_fn(n).poly.with_var("E") == IntPoly.parse(FN_TABLE[n])
    assert class_fn0(n).poly == IntPoly.parse(FN0_TABLE[n])


@pytest.mark.parametrize("n", range(1, 21))
def test_structure(n):
    fn = class_fn(n).poly
    assert fn.degree == n and fn.leading == 1 and fn[0] == 0
    fn0 = class_fn0(n).poly
    assert fn0.degree == n - 1 and fn0.leading == 1
    for k in range(1, n + 1):
        assert fn[k] == (-1) ** (n - k) * stirling_first(n, k)
        assert fn0[k - 1] == (-1) ** (n - k) * stirling_mod(n, k)


@pytest.mark.parametrize("n", range(0, 9))
def test_inclusion_exclusion_assembly(n):
    assert class_fn_by_inclusion_exclusion(n) == class_fn(n).poly


@pytest.mark.parametrize("n", range(1, 13))
def test_fn_is_falling_factorial_in_class(n):
    X = IntPoly.gen("X")
    expected = IntPoly((1,), "X")
    for i in range(n):
        expected = expected * (X - i)
    assert class_fn(n).poly == expected


def test_virtual_poincare_examples():
    assert virtual_poincare(class_fn0(2), S_ELLIPTIC) == x**2 + 2 * x - 3
    p = x**3 + 5 * x + 7
    assert virtual_poincare(class_fn(1), p) == p
    assert virtual_poincare(class_fn(3), S_PROJECTIVE_LINE) == x**6 - x**2
    with pytest.raises(VariableMismatchError):
        virtual_poincare(class_fn(2), IntPoly.gen("E"))


def test_virtual_poincare_of_fn_over_elliptic_curve_is_multiplicative_path():
    # S(F_2(E)) = S(E)^2 - S(E) computed by hand
    assert virtual_poincare(class_fn(2), S_ELLIPTIC) == S_ELLIPTIC * S_ELLIPTIC - S_ELLIPTIC


def test_table_rows_examples():
    assert table_rows(Space.FN0, 2, 2) == ["E - 4"]
    assert table_rows("fn", 4, 4) == ["E^4 - 6E^3 + 11E^2 - 6E"]
    assert json.loads(table_rows(Space.FN0, 5, 5, "json")[0]) == [600, -50, 35, -10, 1]
    with pytest.raises(ValueError):
        table_rows(Space.FN, 3, 2)
    with pytest.raises(ValueError):
        table_rows(Space.FN, 1, 9, n_max=8)


def test_latex_rows_match_published_tables():
    for space, table in ((Space.FN, FN_TABLE), (Space.FN0, FN0_TABLE)):
        rows = table_rows(space, 2, 8, "latex")
        assert [normalize(r) for r in rows] == [normalize(table[n]) for n in range(2, 9)]
