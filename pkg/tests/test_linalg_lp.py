from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from kostka_degree import linalg
from kostka_degree.bzgeom import Constraint, ConstraintSystem, affine_hull, affine_hull_dimension
from kostka_degree.lp import Infeasible, LinearSystem, Unbounded

small = st.integers(-4, 4)


def test_rref_rank_inverse():
    a = [[1, 2], [3, 4]]
    inv = linalg.inverse(a)
    assert linalg.matmul(a, inv) == [[1, 0], [0, 1]]
    assert linalg.rank([[1, 2, 3], [2, 4, 6]]) == 1
    with pytest.raises(ZeroDivisionError):
        linalg.inverse([[1, 2], [2, 4]])


def test_solve_inconsistent():
    assert linalg.solve([[1, 1], [1, 1]], [1, 2]) is None
    assert linalg.solve([[2, 0], [0, 4]], [1, 1]) == (F(1, 2), F(1, 4))


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=4))
def test_nullspace_is_kernel(m):
    basis = linalg.nullspace(m)
    assert len(basis) == 4 - linalg.rank(m)
    for v in basis:
        assert all(x == 0 for x in linalg.matvec(m, v))


def test_lp_forced_equality():
    ls = LinearSystem(1, [((1,), 0, ">="), ((-1,), 0, ">=")])
    assert ls.maximize((1,)) == (0, (0,))


def test_lp_infeasible_and_unbounded():
    with pytest.raises(Infeasible):
        LinearSystem(1, [((1,), 1, ">="), ((-1,), 0, ">=")])
    ls = LinearSystem(1, [((1,), 0, ">=")])
    with pytest.raises(Unbounded):
        ls.maximize((1,))


def test_lp_simplex_value():
    ls = LinearSystem(2, [((1, 0), 0, ">="), ((0, 1), 0, ">="), ((-1, -1), -1, ">=")])
    val, x = ls.maximize((1, 2))
    assert val == 2 and x == (0, 1)


def test_lp_free_variables_and_equalities():
    # x + y = 3, x - y >= -1, y >= 0, x <= 5 ; maximize y -> y = 2
    ls = LinearSystem(2, [((1, 1), 3, "="), ((1, -1), -1, ">="), ((0, 1), 0, ">="), ((-1, 0), -5, ">=")])
    val, x = ls.maximize((0, 1))
    assert val == 2 and x == (1, 2)
    val, x = ls.maximize((0, -1))
    assert val == 0 and x == (3, 0)


def _box_system(lo, hi):
    rows = []
    n = len(lo)
    for i in range(n):
        e = tuple(F(int(i == j)) for j in range(n))
        rows.append(Constraint(e, F(lo[i]), ">="))
        rows.append(Constraint(tuple(-x for x in e), F(-hi[i]), ">="))
    return ConstraintSystem(tuple(f"x{i}" for i in range(n)), tuple(rows))


@given(st.lists(st.tuples(small, st.integers(0, 3)), min_size=1, max_size=5))
def test_affine_hull_of_boxes(spec):
    lo = [a for a, _ in spec]
    hi = [a + w for a, w in spec]
    cs = _box_system(lo, hi)
    dim, point = affine_hull_dimension(cs)
    assert dim == sum(1 for _, w in spec if w > 0)
    assert cs.contains(point)
    h = affine_hull(cs)
    for k, c in enumerate(cs.rows):
        assert (c.slack(point) == 0) == (k in h.implicit)


def test_affine_hull_simplex_with_hidden_equality():
    # x, y >= 0, x + y <= 1 and x + y >= 1  ->  a segment
    rows = (
        Constraint((F(1), F(0)), F(0), ">="),
        Constraint((F(0), F(1)), F(0), ">="),
        Constraint((F(-1), F(-1)), F(-1), ">="),
        Constraint((F(1), F(1)), F(1), ">="),
    )
    cs = ConstraintSystem(("x", "y"), rows)
    dim, point = affine_hull_dimension(cs)
    assert dim == 1
    assert point[0] > 0 and point[1] > 0 and sum(point) == 1


def test_affine_hull_empty():
    cs = ConstraintSystem(("x",), (Constraint((F(1),), F(1), ">="), Constraint((F(-1),), F(0), ">=")))
    with pytest.raises(Infeasible):
        affine_hull(cs)
