"""Weight multiplicities: Kostant partition function, Kostant's formula, SSYT oracle."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import linalg
from .rootsys import weyl_group, WEYL_RANK_CAP


class PartitionTable:
    """Dense table of the Kostant partition function in simple-root coordinates.

    ``table[x]`` counts the ways to write ``sum x_i alpha_i`` as a nonnegative
    integer combination of ``roots``.  The table is built by the usual
    unbounded-knapsack recursion ``count_k(v) = count_{k-1}(v) + count_k(v - beta_k)``
    over the roots in the given order, starting from the indicator of ``0``.
    It only ever grows, so one instance can be reused across queries.
    """

    def __init__(self, rs, order=None):
        self.rank = rs.rank
        self.roots = tuple(tuple(int(c) for c in x) for x in (order or rs.positive_coords))
        self.shape = None
        self.table = None

    def ensure(self, box):
        box = tuple(int(b) for b in box)
        if self.shape is not None and all(b < s for b, s in zip(box, self.shape)):
            return
        shape = tuple(b + 1 for b in box)
        if self.shape is not None:
            shape = tuple(max(a, b) for a, b in zip(shape, self.shape))
        self._build(shape)

    def _build(self, shape):
        t = np.zeros(shape, dtype=object)
        t[(0,) * len(shape)] = 1
        for a in self.roots:
            k = next(i for i, c in enumerate(a) if c)
            for step in range(a[k], shape[k]):
                dst = []
                src = []
                for j, (c, n) in enumerate(zip(a, shape)):
                    if j == k:
                        dst.append(step)
                        src.append(step - c)
                    else:
                        dst.append(slice(c, n))
                        src.append(slice(0, n - c))
                t[tuple(dst)] += t[tuple(src)]
        self.table = t
        self.shape = shape

    def count(self, x):
        x = tuple(int(c) for c in x)
        if any(c < 0 for c in x):
            return 0
        if self.rank == 0:
            return 1
        self.ensure(x)
        return int(self.table[x])


def kostant_partition(rs, v, table=None):
    """Number of ways to write ``v`` (ambient coordinates) as a sum of positive roots."""
    x = rs.to_simple_coords(v)
    if x is None or any(c.denominator != 1 or c < 0 for c in x):
        return 0
    if table is None:
        table = PartitionTable(rs)
    return table.count(x)


def _dynkin_ints(rs, v, name):
    d = rs.to_dynkin(linalg.frac_vec(v))
    if any(x.denominator != 1 for x in d):
        raise ValueError(f"{name} is not an integral weight")
    return np.array([int(x) for x in d], dtype=np.int64)


def _adjugate(rs):
    inv = rs.cartan_inverse
    det = 1
    for row in inv:
        for x in row:
            det = det * x.denominator // np.gcd(det, x.denominator)
    adj = np.array([[int(x * det) for x in row] for row in inv], dtype=np.int64)
    return adj, det


def weyl_shifted_arguments(rs, lam, mu, cap=WEYL_RANK_CAP):
    """``w(lam + rho) - mu - rho`` for every Weyl element, in simple-root coordinates.

    Returns ``(coords, dets)`` restricted to the elements whose argument is a
    nonnegative integral root combination (all others contribute zero).
    """
    W = weyl_group(rs, cap=cap)
    lam_d = _dynkin_ints(rs, lam, "lambda")
    mu_d = _dynkin_ints(rs, mu, "mu")
    ones = np.ones(rs.rank, dtype=np.int64)
    args = W.matrices @ (lam_d + ones) - (mu_d + ones)
    adj, den = _adjugate(rs)
    scaled = args @ adj.T
    ok = np.all(scaled % den == 0, axis=1)
    x = scaled // den
    ok &= np.all(x >= 0, axis=1)
    return x[ok], W.dets[ok]


def kostka_kostant(rs, lam, mu, table=None, cap=WEYL_RANK_CAP):
    """``K_{lam,mu}`` by Kostant's multiplicity formula (alternating sum over W)."""
    if rs.rank == 0:
        return 1 if tuple(lam) == tuple(mu) else 0
    xs, dets = weyl_shifted_arguments(rs, lam, mu, cap=cap)
    if len(xs) == 0:
        return 0
    if table is None:
        table = PartitionTable(rs)
    table.ensure(xs.max(axis=0))
    total = 0
    for x, s in zip(xs, dets):
        total += int(s) * int(table.table[tuple(x)])
    return total


# -- type A oracle ---------------------------------------------------------------


def kostka_gt_typeA(r, shape, content):
    """Number of semistandard Young tableaux of ``shape`` and ``content``.

    Backtracking over the entries ``n, n-1, ..., 1``: the cells holding the
    largest remaining entry form a horizontal strip removed from the current
    shape.  Each tableau is visited exactly once.
    """
    n = r + 1
    shape = [int(x) for x in shape if int(x) != 0]
    content = [int(x) for x in content]
    if any(x < 0 for x in content) or any(x < 0 for x in shape):
        raise ValueError("negative entries")
    if sorted(shape, reverse=True) != shape:
        raise ValueError("shape must be a partition")
    if len(shape) > n or len(content) > n:
        raise ValueError(f"at most {n} rows/entries in type A_{r}")
    if sum(shape) != sum(content):
        raise ValueError("|shape| != |content|")
    content = content + [0] * (n - len(content))

    def strips(rows, k, size):
        # all ways to remove a horizontal strip of ``size`` cells from ``rows``,
        # leaving a partition with at most k rows
        out = []

        def rec(i, left, cur):
            if i == len(rows):
                if left == 0:
                    out.append(tuple(cur))
                return
            nxt = rows[i + 1] if i + 1 < len(rows) else 0
            hi = rows[i]
            for new in range(max(nxt, hi - left), hi + 1):
                if i >= k and new != 0:
                    continue  # rows below k must be emptied
                cur.append(new)
                rec(i + 1, left - (hi - new), cur)
                cur.pop()

        rec(0, size, [])
        return out

    def count(rows, k):
        if k == 0:
            return 1 if sum(rows) == 0 else 0
        total = 0
        for smaller in strips(list(rows), k - 1, content[k - 1]):
            total += count(smaller, k - 1)
        return total

    return count(tuple(shape) + (0,) * (n - len(shape)), n)


# -- stretching -------------------------------------------------------------------


def default_method(rs):
    """Kostant with a dense table is the faster sampler whenever W fits under the cap."""
    if rs.rank <= WEYL_RANK_CAP or rs.type_label not in ("B", "C", "D"):
        return "kostant"
    return "bz"


def stretched_samples(rs, lam, mu, n_max, method="auto", threads=1):
    """``[K_{N lam, N mu} for N = 1..n_max]``."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if method == "auto":
        method = default_method(rs)
    lam = linalg.frac_vec(lam)
    mu = linalg.frac_vec(mu)
    stretched = [(linalg.scale(Fraction(n), lam), linalg.scale(Fraction(n), mu)) for n in range(1, n_max + 1)]
    if method == "kostant":
        if rs.rank == 0:
            return [kostka_kostant(rs, a, b) for a, b in stretched]
        table = PartitionTable(rs)
        xs, _ = weyl_shifted_arguments(rs, *stretched[-1])
        if len(xs):
            table.ensure(xs.max(axis=0))
        return [kostka_kostant(rs, a, b, table=table) for a, b in stretched]
    if method == "bz":
        from .bzgeom import count_integral_patterns

        if threads > 1:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(max_workers=threads) as ex:
                futs = [ex.submit(count_integral_patterns, rs, a, b) for a, b in stretched]
                return [f.result() for f in futs]
        return [count_integral_patterns(rs, a, b) for a, b in stretched]
    if method == "ssyt":
        if rs.type_label != "A":
            raise ValueError("the tableau method is type A only")
        return [kostka_ssyt(rs, a, b) for a, b in stretched]
    raise ValueError(f"unknown method {method!r}")


def kostka_ssyt(rs, lam, mu):
    """Type A multiplicity from trace-zero weights via the tableau oracle.

    Both weights are shifted by the same constant so that ``lam`` becomes a
    partition; adding full columns does not change the tableau count.
    """
    lam = rs.weight(lam)
    mu = rs.weight(mu)
    shift = -min(lam)
    shape = [x + shift for x in lam]
    content = [x + shift for x in mu]
    if any(x.denominator != 1 for x in content):
        return 0
    extra = max(0, -min(content))
    shape = [int(x) + extra for x in shape]
    content = [int(x) + extra for x in content]
    if sorted(shape, reverse=True) != shape:
        raise ValueError("lambda is not dominant")
    return kostka_gt_typeA(rs.rank, shape, content)
