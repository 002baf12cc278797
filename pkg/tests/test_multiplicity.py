import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from kostka_degree import linalg
from kostka_degree.multiplicity import (
    PartitionTable,
    kostant_partition,
    kostka_gt_typeA,
    kostka_kostant,
    kostka_ssyt,
    stretched_samples,
)
from kostka_degree.rootsys import (
    build_root_system,
    dominant_representative,
    project_weight,
    simple_root_coefficients,
    subsystem,
    support,
    weyl_group,
)
from kostka_degree.bzgeom import count_integral_patterns

TYPES = [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 3), ("D", 4), ("G2", 2)]


def test_partition_examples():
    a2 = build_root_system("A", 2)
    assert kostant_partition(a2, (0, 0, 0)) == 1
    assert kostant_partition(a2, linalg.add(a2.simple_roots[0], a2.simple_roots[1])) == 2
    b2 = build_root_system("B", 2)
    assert kostant_partition(b2, (1, 0)) == 2
    assert kostant_partition(b2, (0, -1)) == 0
    assert kostant_partition(b2, (F(1, 2), F(1, 2))) == 0


@pytest.mark.parametrize("t,r", TYPES)
def test_partition_of_simple_root_is_one(t, r):
    rs = build_root_system(t, r)
    table = PartitionTable(rs)
    for a in rs.simple_roots:
        assert kostant_partition(rs, a, table) == 1


@pytest.mark.parametrize("t,r", TYPES)
def test_partition_order_independent(t, r):
    rs = build_root_system(t, r)
    order = list(rs.positive_coords)
    random.Random(7).shuffle(order)
    a, b = PartitionTable(rs), PartitionTable(rs, order=order)
    box = (4,) * r
    a.ensure(box)
    b.ensure(box)
    assert (a.table[tuple(slice(0, 5) for _ in box)] == b.table[tuple(slice(0, 5) for _ in box)]).all()


def test_partition_table_grows():
    rs = build_root_system("B", 2)
    t = PartitionTable(rs)
    small = t.count((2, 2))
    t.count((6, 1))
    assert t.count((2, 2)) == small
    assert t.shape[0] >= 7 and t.shape[1] >= 3


def test_kostka_examples():
    a2 = build_root_system("A", 2)
    assert kostka_kostant(a2, a2.from_dynkin((1, 1)), (0, 0, 0)) == 2
    b2 = build_root_system("B", 2)
    assert kostka_kostant(b2, (1, 0), (0, 0)) == 1
    assert kostka_kostant(b2, (1, 0), (1, 1)) == 0
    for t, r in TYPES:
        rs = build_root_system(t, r)
        lam = rs.from_dynkin((1,) * r)
        assert kostka_kostant(rs, lam, lam) == 1


def test_ssyt_examples():
    assert kostka_gt_typeA(2, (2, 1), (1, 1, 1)) == 2
    assert kostka_gt_typeA(2, (4, 2), (2, 2, 2)) == 3
    assert kostka_gt_typeA(3, (3, 2, 1), (3, 2, 1)) == 1
    assert kostka_gt_typeA(3, (2, 2), (1, 1, 1, 1)) == 2
    with pytest.raises(ValueError):
        kostka_gt_typeA(2, (1, 2), (2, 1))


@given(st.data())
def test_typeA_kostant_matches_tableaux(data):
    r = data.draw(st.integers(1, 3))
    rs = build_root_system("A", r)
    lam = rs.from_dynkin(data.draw(st.lists(st.integers(0, 3), min_size=r, max_size=r)))
    mu = rs.from_dynkin(data.draw(st.lists(st.integers(-2, 3), min_size=r, max_size=r)))
    assert kostka_kostant(rs, lam, mu) == kostka_ssyt(rs, lam, mu)


@given(st.sampled_from(TYPES), st.data())
def test_weyl_invariance(tr, data):
    t, r = tr
    rs = build_root_system(t, r)
    lam = rs.from_dynkin(data.draw(st.lists(st.integers(0, 2), min_size=r, max_size=r)))
    mu = rs.from_dynkin(data.draw(st.lists(st.integers(-2, 2), min_size=r, max_size=r)))
    assert kostka_kostant(rs, lam, mu) == kostka_kostant(rs, lam, dominant_representative(rs, mu))


def test_d3_equals_a3():
    d3, a3 = build_root_system("D", 3), build_root_system("A", 3)
    # D3 node 1 is the branch node, so it plays the role of A3 node 2
    perm = lambda v: (v[1], v[0], v[2])  # noqa: E731
    rng = range(0, 3)
    for a in rng:
        for b in rng:
            for c in rng:
                lam = (a, b, c)
                for m in [(0, 0, 0), (1, 0, 0), (0, 1, 1), (0, 2, 0), (2, 0, 0), (0, 0, 2)]:
                    k_d = kostka_kostant(d3, d3.from_dynkin(lam), d3.from_dynkin(m))
                    k_a = kostka_kostant(a3, a3.from_dynkin(perm(lam)), a3.from_dynkin(perm(m)))
                    assert k_d == k_a


@given(st.sampled_from([("A", 3), ("B", 3), ("C", 3), ("D", 4)]), st.data())
def test_levi_reduction(tr, data):
    """K over the whole system equals K over the subsystem spanned by supp(lam - mu)."""
    t, r = tr
    rs = build_root_system(t, r)
    lam = rs.from_dynkin(data.draw(st.lists(st.integers(0, 2), min_size=r, max_size=r)))
    c = data.draw(st.lists(st.integers(0, 2), min_size=r, max_size=r))
    mu = linalg.sub(lam, rs.from_simple_coords(c))
    s = support(rs, c)
    sub = subsystem(rs, s)
    expected = kostka_kostant(rs, lam, mu)
    assert kostka_kostant(sub, project_weight(rs, s, lam), project_weight(rs, s, mu)) == expected


def test_stretched_examples():
    a2 = build_root_system("A", 2)
    rho = a2.from_dynkin((1, 1))
    assert stretched_samples(a2, rho, (0, 0, 0), 4) == [2, 3, 4, 5]
    assert stretched_samples(a2, rho, (0, 0, 0), 4, method="ssyt") == [2, 3, 4, 5]
    assert stretched_samples(a2, rho, rho, 3) == [1, 1, 1]
    b2 = build_root_system("B", 2)
    lam = b2.from_dynkin((0, 2))
    assert stretched_samples(b2, lam, (0, 0), 8) == [2, 3, 4, 5, 6, 7, 8, 9]
    assert stretched_samples(b2, lam, (0, 0), 8, method="bz") == [2, 3, 4, 5, 6, 7, 8, 9]
    assert stretched_samples(b2, (1, 0), (0, 0), 5) == [1, 2, 2, 3, 3]


def test_stretched_d4_adjoint_frozen():
    d4 = build_root_system("D", 4)
    lam = d4.from_dynkin((0, 1, 0, 0))
    got = stretched_samples(d4, lam, (0, 0, 0, 0), 16)
    assert got == [4, 12, 29, 62, 120, 216, 366, 591, 916, 1372, 1995, 2828, 3920, 5328, 7116, 9357]
    assert stretched_samples(d4, lam, (0, 0, 0, 0), 6, method="bz") == got[:6]


def test_stretched_threads_and_errors():
    b2 = build_root_system("B", 2)
    assert stretched_samples(b2, (1, 0), (0, 0), 5, method="bz", threads=2) == [1, 2, 2, 3, 3]
    with pytest.raises(ValueError):
        stretched_samples(b2, (1, 0), (0, 0), 0)
    with pytest.raises(ValueError):
        stretched_samples(b2, (1, 0), (0, 0), 3, method="ssyt")


def test_big_integers_do_not_overflow():
    b3 = build_root_system("B", 3)
    lam = b3.from_dynkin((1, 1, 1))
    mu = b3.from_dynkin((0, 0, 1))
    big = kostka_kostant(b3, linalg.scale(80, lam), linalg.scale(80, mu))
    assert isinstance(big, int) and big > 2**32
