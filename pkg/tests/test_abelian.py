"""Smith normal form and finitely generated abelian groups, checked against sympy."""
import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors

from daxcalc.abelian import (INFINITE, AbelianGroup, IntMatrix, Presentation, parse_abelian_group,
                             smith_normal_form, solve_integer)


def matrices(max_rows=4, max_cols=4, bound=12):
    return st.integers(1, max_rows).flatmap(lambda r: st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(st.integers(-bound, bound), min_size=c, max_size=c), min_size=r, max_size=r)))


def oracle_group(rows, n) -> AbelianGroup:
    """Quotient Z^n / rowspan via sympy's invariant factors."""
    if not rows or all(x == 0 for r in rows for x in r):
        return AbelianGroup(n)
    inv = [int(x) for x in sympy_invariant_factors(Matrix(rows), domain=ZZ) if x != 0]
    return AbelianGroup(n - len(inv), tuple(abs(x) for x in inv if abs(x) != 1))


def determinantal(rows):
    """Rank and absolute product of the nonzero invariant factors (sympy)."""
    if not rows or all(x == 0 for r in rows for x in r):
        return 0, 1
    inv = [abs(int(x)) for x in sympy_invariant_factors(Matrix(rows), domain=ZZ) if x != 0]
    p = 1
    for x in inv:
        p *= x
    return len(inv), p


def oracle_contains(rows, v) -> bool:
    # v lies in L iff adding it changes neither the rank nor the determinantal divisor
    return determinantal(rows) == determinantal(list(rows) + [list(v)])


def test_smith_example():
    A = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    U, D, V = smith_normal_form(A)
    assert [D[i, i] for i in range(3)] == [2, 6, 12]
    assert (U @ A @ V).to_lists() == D.to_lists()
    assert abs(U.det()) == 1 and abs(V.det()) == 1


@given(matrices())
def test_smith_form_unimodular_and_diagonal(rows):
    A = IntMatrix.from_rows(rows)
    U, D, V = smith_normal_form(A)
    assert (U @ A @ V).to_lists() == D.to_lists()
    assert abs(U.det()) == 1 and abs(V.det()) == 1
    diag = [D[i, i] for i in range(min(D.rows, D.cols))]
    assert all(D[i, j] == 0 for i in range(D.rows) for j in range(D.cols) if i != j)
    assert all(x >= 0 for x in diag)
    nz = [x for x in diag if x]
    assert diag[:len(nz)] == nz
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))


@given(matrices())
def test_quotient_matches_sympy(rows):
    n = len(rows[0])
    assert Presentation(n, tuple(map(tuple, rows))).group() == oracle_group(rows, n)


@given(matrices(3, 3, 6), st.lists(st.integers(-8, 8), min_size=3, max_size=3))
def test_membership_and_order_match_oracle(rows, v):
    n = len(rows[0])
    v = v[:n]
    p = Presentation(n, tuple(map(tuple, rows)))
    assert p.contains(v) == oracle_contains(rows, v)
    order = p.order(v)
    g = p.group()
    if order is INFINITE:
        assert g.free_rank > 0
        assert not any(oracle_contains(rows, [m * x for x in v]) for m in range(1, 50))
    else:
        assert oracle_contains(rows, [order * x for x in v])
        assert not any(oracle_contains(rows, [m * x for x in v]) for m in range(1, order))


@given(matrices(4, 3, 6), st.lists(st.integers(-8, 8), min_size=4, max_size=4))
def test_solve_integer(rows, b):
    A = IntMatrix.from_rows(rows)
    b = b[:A.rows]
    x = solve_integer(A, b)
    if x is not None:
        assert list(A.apply(x)) == b
    else:
        # no integer solution: b is not in the column lattice
        cols = [list(c) for c in zip(*rows)]
        assert not oracle_contains(cols, b)


@pytest.mark.parametrize("text,group", [
    ("0", AbelianGroup()), ("Z", AbelianGroup(1)), ("Z^3", AbelianGroup(3)),
    ("Z/2 ⊕ Z/3", AbelianGroup(0, (6,))), ("Z/4 + Z/2 + Z", AbelianGroup(1, (2, 4))), ("Z/1", AbelianGroup()),
])
def test_parse_abelian(text, group):
    assert parse_abelian_group(text) == group
    assert parse_abelian_group(str(group)) == group


def test_abelian_group_validation_and_json():
    with pytest.raises(ValueError):
        AbelianGroup(0, (4, 2))
    with pytest.raises(ValueError):
        AbelianGroup(-1)
    with pytest.raises(ValueError):
        parse_abelian_group("Q")
    g = AbelianGroup(2, (2, 6))
    assert AbelianGroup.from_json(g.to_json()) == g
    assert str(g) == "Z^2 ⊕ Z/2 ⊕ Z/6"
    assert g.direct_sum(AbelianGroup(0, (3,))) == AbelianGroup(2, (6, 6))
    assert g.torsion_order == 12 and g.min_generators == 4


def test_empty_presentation():
    assert Presentation(3).group() == AbelianGroup(3)
    assert Presentation(0).group() == AbelianGroup()
    assert Presentation(2, ((0, 0),)).order((1, 0)) is INFINITE
