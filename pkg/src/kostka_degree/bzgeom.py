"""Berenstein-Zelevinsky patterns and polytopes for types B, C and D.

A pattern of rank ``r`` has rows ``lambda_{i,j}`` (``1 <= i <= j <= r``) and
``eta_{i,j}`` (``j <= r`` in types B/C, ``j <= r - 1`` in type D), drawn as::

    l11     l12     ...     l1r
        e11     e12     ...     e1r
            l22     ...     l2r
                ...

with interlacing ``min(l_{i,j}, l_{i+1,j}) >= e_{i,j} >= max(l_{i,j+1}, l_{i+1,j+1})``
wherever the entries exist, ``e_{i,r} >= 0`` in types B/C, and in type D the
extra inequalities ``l_{i,r} + l_{i+1,r} + min(l_{i,r-1}, l_{i+1,r-1}) >= e_{i,r-1}``
(the term ``l_{r,r-1}`` is absent, i.e. ``+inf``).  The weight is
``mu_i = |l_i| + |l_{i+1}| - 2 |e_i|``.

The first row is ``lambda`` itself and is never a coordinate; the remaining
entries are named ``L_i_j`` and ``E_i_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .lp import LinearSystem
from .rootsys import (
    dominant_representative,
    positive_roots_supported_on,
)

BZ_TYPES = ("B", "C", "D")


class DeltaTooLarge(ValueError):
    pass


def _check_type(rs):
    if rs.type_label not in BZ_TYPES:
        raise ValueError(f"BZ patterns are defined for types B, C, D (got {rs.type_label})")


def eta_last(type_label, r):
    """Largest column index of an eta entry."""
    return r - 1 if type_label == "D" else r


# -- patterns -----------------------------------------------------------------------


@dataclass(frozen=True)
class BZPattern:
    type_label: str
    rank: int
    lambda_rows: tuple  # lambda_rows[i-1] = (l_{i,i}, ..., l_{i,r})
    eta_rows: tuple  # eta_rows[i-1] = (e_{i,i}, ..., e_{i,last})

    def lam(self, i, j):
        return self.lambda_rows[i - 1][j - i]

    def eta(self, i, j):
        return self.eta_rows[i - 1][j - i]

    def coordinates(self):
        """Dict of coordinate name to value (first row excluded)."""
        out = {}
        for i, row in enumerate(self.lambda_rows, start=1):
            if i > 1:
                for j, x in enumerate(row, start=i):
                    out[f"L_{i}_{j}"] = x
        for i, row in enumerate(self.eta_rows, start=1):
            for j, x in enumerate(row, start=i):
                out[f"E_{i}_{j}"] = x
        return out

    def to_json(self):
        return {
            "type": self.type_label,
            "rank": self.rank,
            "lambda": [[str(x) for x in row] for row in self.lambda_rows],
            "eta": [[str(x) for x in row] for row in self.eta_rows],
        }

    def substitute(self, delta):
        """Evaluate a pattern whose entries are ``Affine`` in a symbolic delta."""
        def ev(x):
            return x.at(delta) if isinstance(x, Affine) else x

        return BZPattern(
            self.type_label,
            self.rank,
            tuple(tuple(ev(x) for x in row) for row in self.lambda_rows),
            tuple(tuple(ev(x) for x in row) for row in self.eta_rows),
        )


def pattern_from_coordinates(rs, lam, values):
    """Assemble a pattern from the first row ``lam`` and a name->value mapping."""
    _check_type(rs)
    r = rs.rank
    last = eta_last(rs.type_label, r)
    lam_rows = [tuple(Fraction(x) for x in lam)]
    for i in range(2, r + 1):
        lam_rows.append(tuple(Fraction(values[f"L_{i}_{j}"]) for j in range(i, r + 1)))
    eta_rows = []
    for i in range(1, r + 1):
        eta_rows.append(tuple(Fraction(values[f"E_{i}_{j}"]) for j in range(i, last + 1)))
    return BZPattern(rs.type_label, r, tuple(lam_rows), tuple(eta_rows))


def weight_of_pattern(p):
    r = p.rank
    sums_l = [sum(row, Fraction(0)) for row in p.lambda_rows] + [Fraction(0)]
    sums_e = [sum(row, Fraction(0)) for row in p.eta_rows]
    return tuple(sums_l[i] + sums_l[i + 1] - 2 * sums_e[i] for i in range(r))


# -- constraint systems ---------------------------------------------------------------


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple  # over ConstraintSystem.names
    rhs: Fraction
    rel: str  # ">=" or "="

    def value(self, x):
        return linalg.dot(self.coeffs, x)

    def slack(self, x):
        return self.value(x) - self.rhs

    def holds(self, x):
        s = self.slack(x)
        return s == 0 if self.rel == "=" else s >= 0


@dataclass(frozen=True)
class ConstraintSystem:
    names: tuple
    rows: tuple

    @property
    def n(self):
        return len(self.names)

    def point(self, mapping):
        return tuple(Fraction(mapping[k]) for k in self.names)

    def contains(self, x):
        return all(c.holds(x) for c in self.rows)

    def inequalities(self):
        return [c for c in self.rows if c.rel == ">="]

    def equalities(self):
        return [c for c in self.rows if c.rel == "="]

    def to_json(self):
        return {
            "names": list(self.names),
            "constraints": [
                {"coeffs": [str(a) for a in c.coeffs], "rhs": str(c.rhs), "rel": c.rel}
                for c in self.rows
            ],
        }


class _Builder:
    def __init__(self, names, first_row):
        self.index = {k: i for i, k in enumerate(names)}
        self.names = tuple(names)
        self.first = first_row
        self.rows = []

    def term(self, kind, i, j):
        """``(name, None)`` for a coordinate, ``(None, value)`` for a first-row constant."""
        if kind == "L" and i == 1:
            return None, self.first[j - 1]
        return f"{kind}_{i}_{j}", None

    def add(self, plus, minus, rhs=Fraction(0), rel=">="):
        """``sum(plus) - sum(minus) (rel) rhs`` with entries given as (kind, i, j)."""
        co = [Fraction(0)] * len(self.names)
        const = Fraction(0)
        for sign, terms in ((1, plus), (-1, minus)):
            for t in terms:
                name, val = self.term(*t)
                if name is None:
                    const += sign * val
                else:
                    co[self.index[name]] += sign
        self.rows.append(Constraint(tuple(co), Fraction(rhs) - const, rel))


def coordinate_names(type_label, r):
    last = eta_last(type_label, r)
    names = [f"L_{i}_{j}" for i in range(2, r + 1) for j in range(i, r + 1)]
    names += [f"E_{i}_{j}" for i in range(1, r + 1) for j in range(i, last + 1)]
    return names


def constraint_system_bz(rs, lam, mu=None):
    """H-description of ``BZ_lam`` (or of the section ``BZ_{lam,mu}`` when ``mu`` is given)."""
    _check_type(rs)
    t = rs.type_label
    r = rs.rank
    lam = linalg.frac_vec(lam)
    last = eta_last(t, r)
    b = _Builder(coordinate_names(t, r), lam)
    for i in range(1, r + 1):
        for j in range(i, last + 1):
            e = ("E", i, j)
            b.add([("L", i, j)], [e])
            if i + 1 <= j:
                b.add([("L", i + 1, j)], [e])
            if j + 1 <= r:
                b.add([e], [("L", i, j + 1)])
                b.add([e], [("L", i + 1, j + 1)])
            if t in "BC" and j == r:
                b.add([e], [])
    if t == "D":
        for i in range(1, r):
            base = [("L", i, r), ("L", i + 1, r)]
            e = ("E", i, r - 1)
            b.add(base + [("L", i, r - 1)], [e])
            if i + 1 <= r - 1:
                b.add(base + [("L", i + 1, r - 1)], [e])
    if mu is not None:
        mu = linalg.frac_vec(mu)
        for i in range(1, r + 1):
            plus = [("L", i, j) for j in range(i, r + 1)]
            plus += [("L", i + 1, j) for j in range(i + 1, r + 1)]
            minus = [("E", i, j) for j in range(i, last + 1)]
            minus = minus + minus
            b.add(plus, minus, rhs=mu[i - 1], rel="=")
    return ConstraintSystem(b.names, tuple(b.rows))


def pattern_satisfies(rs, p, mu=None):
    cs = constraint_system_bz(rs, p.lambda_rows[0], mu)
    return cs.contains(cs.point(p.coordinates()))


# -- integrality ------------------------------------------------------------------------


@dataclass(frozen=True)
class LatticeSpec:
    """Which lattice each pattern coordinate lives on.

    ``shift`` is the common class (0 for Z, 1/2 for 1/2 + Z) shared by all
    coordinates except those in ``half_free``, which only need to lie in 1/2 Z.
    """

    type_label: str
    shift: Fraction
    half_free: frozenset

    def allows(self, name, x):
        x = Fraction(x)
        if name in self.half_free:
            return (2 * x).denominator == 1
        return (x - self.shift).denominator == 1

    def contains(self, p):
        first_ok = all((Fraction(x) - self.shift).denominator == 1 for x in p.lambda_rows[0])
        return first_ok and all(self.allows(k, v) for k, v in p.coordinates().items())


def lattice_spec(rs, lam):
    _check_type(rs)
    lam = linalg.frac_vec(lam)
    t = rs.type_label
    shift = Fraction(1, 2) if any(x.denominator != 1 for x in lam) else Fraction(0)
    if t == "C" and shift:
        raise ValueError("type C weights are integral in epsilon coordinates")
    half_free = frozenset(f"E_{i}_{rs.rank}" for i in range(1, rs.rank + 1)) if t == "B" else frozenset()
    return LatticeSpec(t, shift, half_free)


# -- counting integral patterns ----------------------------------------------------------


def _doubled(v):
    out = []
    for x in v:
        y = 2 * Fraction(x)
        if y.denominator != 1:
            return None
        out.append(int(y))
    return tuple(out)


def _admissible(rs, lam, mu):
    """Doubled first row and weight, or ``None`` if no integral pattern can exist."""
    _check_type(rs)
    lam = linalg.frac_vec(lam)
    mu = linalg.frac_vec(mu)
    if not (rs.is_dominant(lam) and rs.is_integral(lam) and rs.is_integral(mu)):
        raise ValueError("lambda must be dominant integral and mu integral")
    c = rs.to_simple_coords(linalg.sub(lam, mu))
    if c is None or any(x.denominator != 1 for x in c):
        return None
    L1 = _doubled(lam)
    M = _doubled(mu)
    parity = L1[0] % 2
    if any(x % 2 != parity for x in L1):
        return None
    return L1, M, parity


def _span(lo, hi, par):
    """Integers in ``[lo, hi]`` with the given parity (``None`` = any)."""
    if par is None:
        return range(lo, hi + 1)
    start = lo + ((par - lo) % 2)
    return range(start, hi + 1, 2)


def _row_transitions(t, r, i, L, H_par, L_par, two_mu):
    """Yield ``(H_row, next_L_row)`` pairs compatible with row ``L`` of index ``i < r``.

    All values are doubled.  ``L[j - i]`` is ``2 l_{i,j}``.
    """
    last = r - 1 if t == "D" else r
    ncols = last - i + 1
    sumL = sum(L)
    bounds = []
    for j in range(i, last + 1):
        hi = L[j - i]
        lo = L[j + 1 - i] if j + 1 <= r else 0
        bounds.append((lo, hi, H_par(j)))

    def eta_rows(k, acc):
        if k == ncols:
            yield tuple(acc)
            return
        lo, hi, par = bounds[k]
        for v in _span(lo, hi, par):
            acc.append(v)
            yield from eta_rows(k + 1, acc)
            acc.pop()

    for H in eta_rows(0, []):
        target = two_mu - sumL + 2 * sum(H)
        # next row entries j = i+1..r; all but the last enumerated, the last fixed by the sum
        ivals = []
        for j in range(i + 1, r + 1):
            up = H[j - 1 - i]
            low = H[j - i] if j <= last else None  # D: l_{i+1,r} has no eta below-right
            ivals.append((low, up))
        n = len(ivals)
        # suffix bounds for pruning (the D last entry only has an upper bound here)
        for row in _fixed_sum_rows(ivals, target, L_par, t, L, i, r, H):
            yield H, row


def _fixed_sum_rows(ivals, target, par, t, L, i, r, H):
    n = len(ivals)
    lows = [lo if lo is not None else None for lo, _ in ivals]
    ups = [up for _, up in ivals]
    # suffix max of the remaining entries (excluding the last one, which is solved for)
    out = []

    def rec(k, acc, left):
        if k == n - 1:
            v = left
            lo, up = ivals[k]
            if v > up or (par is not None and v % 2 != par):
                return
            if t == "D":
                # l_{i,r} + l_{i+1,r} + min(l_{i,r-1}, l_{i+1,r-1}) >= e_{i,r-1}
                m = L[r - 1 - i]
                if i + 1 <= r - 1:
                    m = min(m, acc[-1])
                if L[r - i] + v + m < H[r - 1 - i]:
                    return
            elif v < lo:
                return
            out.append(tuple(acc) + (v,))
            return
        lo, up = ivals[k]
        # remaining entries after this one can absorb at most sum(ups[k+1:])
        rest_max = sum(ups[k + 1:])
        lo_k = max(lo, left - rest_max)
        for v in _span(lo_k, up, par):
            acc.append(v)
            rec(k + 1, acc, left - v)
            acc.pop()

    rec(0, [], target)
    return out


def _pattern_counter(t, r, L1, M, parity):
    """Memoized completion counter over doubled rows."""
    L_par = 0 if t == "C" else parity
    two_mu = M  # already doubled: 2 mu_i

    def H_par(j):
        if t == "C":
            return 0
        if t == "B" and j == r:
            return None
        return parity

    @lru_cache(maxsize=None)
    def count(i, L):
        if i == r:
            if t == "D":
                return 1 if L[0] == two_mu[r - 1] else 0
            # 2 mu_r = 2 l_rr - 4 e_rr in doubled units: L - 2 H = two_mu
            num = L[0] - two_mu[r - 1]
            if num % 2:
                return 0
            h = num // 2
            if h < 0 or h > L[0]:
                return 0
            par = H_par(r)
            if par is not None and h % 2 != par:
                return 0
            return 1
        total = 0
        for _, nxt in _row_transitions(t, r, i, L, H_par, L_par, two_mu[i - 1]):
            total += count(i + 1, nxt)
        return total

    return count, H_par, L_par


def count_integral_patterns(rs, lam, mu):
    """Number of integral BZ patterns with first row ``lam`` and weight ``mu``."""
    adm = _admissible(rs, lam, mu)
    if adm is None:
        return 0
    L1, M, parity = adm
    count, _, _ = _pattern_counter(rs.type_label, rs.rank, L1, M, parity)
    return count(1, L1)


def enumerate_integral_patterns(rs, lam, mu):
    """Yield every integral BZ pattern of highest weight ``lam`` and weight ``mu``."""
    adm = _admissible(rs, lam, mu)
    if adm is None:
        return
    L1, M, parity = adm
    t, r = rs.type_label, rs.rank
    _, H_par, L_par = _pattern_counter(t, r, L1, M, parity)

    def half(row):
        return tuple(Fraction(x, 2) for x in row)

    def rec(i, L, lam_rows, eta_rows):
        if i == r:
            if t == "D":
                if L[0] == M[r - 1]:
                    yield BZPattern(t, r, tuple(lam_rows), tuple(eta_rows) + ((),))
                return
            num = L[0] - M[r - 1]
            if num % 2:
                return
            h = num // 2
            par = H_par(r)
            if 0 <= h <= L[0] and (par is None or h % 2 == par):
                yield BZPattern(t, r, tuple(lam_rows), tuple(eta_rows) + (half((h,)),))
            return
        for H, nxt in _row_transitions(t, r, i, L, H_par, L_par, M[i - 1]):
            yield from rec(i + 1, nxt, lam_rows + [half(nxt)], eta_rows + [half(H)])

    yield from rec(1, L1, [half(L1)], [])


# -- dimension of BZ_lambda ------------------------------------------------------------------


def zero_set(rs, lam):
    """1-based indices ``i`` with ``<lam, alpha_i^vee> = 0``."""
    return tuple(i + 1 for i, d in enumerate(rs.to_dynkin(linalg.frac_vec(lam))) if d == 0)


def dim_bz_lambda(rs, lam):
    """``|Phi_+| - |Phi'_+|`` with ``Phi'`` generated by the simple roots orthogonal to ``lam``."""
    _check_type(rs)
    return len(rs.positive_roots) - len(positive_roots_supported_on(rs, zero_set(rs, lam)))


# -- interior points ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Affine:
    """``const + coef * delta`` for patterns with a symbolic delta."""

    const: Fraction
    coef: Fraction = Fraction(0)

    def __add__(self, other):
        o = _aff(other)
        return Affine(self.const + o.const, self.coef + o.coef)

    __radd__ = __add__

    def __mul__(self, k):
        k = Fraction(k)
        return Affine(self.const * k, self.coef * k)

    __rmul__ = __mul__

    def __sub__(self, other):
        return self + _aff(other) * -1

    def at(self, delta):
        return self.const + self.coef * Fraction(delta)

    def __str__(self):
        if not self.coef:
            return str(self.const)
        mag = abs(self.coef)
        term = "delta" if mag == 1 else f"{mag}*delta"
        return f"{self.const}{'+' if self.coef > 0 else '-'}{term}"


def _aff(x):
    return x if isinstance(x, Affine) else Affine(Fraction(x))


def _component_of(rs, subset, i):
    comps = rs.components([k - 1 for k in subset])
    for comp in comps:
        if i - 1 in comp:
            return [k + 1 for k in comp]
    return []


def default_delta(rs, lam):
    """The delta used when none is given (only type D cases 1 and 3 need one)."""
    case, bound = _delta_case(rs, lam)
    if case is None:
        return None
    return bound / 16


def _delta_case(rs, lam):
    if rs.type_label != "D":
        return None, None
    r = rs.rank
    d = [Fraction(x) for x in rs.to_dynkin(linalg.frac_vec(lam))]
    zs = set(zero_set(rs, lam))
    if r - 1 not in zs and r not in zs:
        return "1", min(d[r - 2], d[r - 1])
    if r - 1 not in zs and r in zs and r >= 3 and len(_component_of(rs, zs, r)) == 1:
        return "3", min(d[r - 2], d[r - 3])
    return None, None


def interior_point_bz(rs, lam, delta=None, symbolic=False):
    """A relative-interior point of ``BZ_lam`` built by averaging.

    Every free entry is the average of the two entries above it (an absent
    right neighbour counts as 0).  Type D needs extra care at the fork of the
    Dynkin diagram:

    * ``d_{r-1}, d_r > 0``: ``e_{1,r-1}``, ``l_{2,r-1}``, ``l_{2,r}`` are set to
      ``s - 2 delta``, ``s - delta``, ``s - 3 delta`` with ``s = (d_{r-1} + d_r) / 2``;
    * ``d_{r-1} > 0 = d_r``: ``l_{2,r} = e_{1,r-1}`` and ``l_{2,r-1} = t`` (or
      ``t + delta`` when ``alpha_r`` is an isolated node of the zero set), ``t = d_{r-1} / 2``.

    With ``symbolic=True`` the entries are ``Affine`` expressions in delta.
    """
    _check_type(rs)
    t_label = rs.type_label
    r = rs.rank
    lam = linalg.frac_vec(lam)
    if not rs.is_dominant(lam):
        raise ValueError("lambda must be dominant")
    case, bound = _delta_case(rs, lam)
    if symbolic:
        dl = Affine(Fraction(0), Fraction(1))
    elif case is None:
        dl = Fraction(0)
    else:
        dl = Fraction(delta) if delta is not None else bound / 16
        if not 0 < dl < bound / 8:
            raise DeltaTooLarge(f"delta must lie in (0, {bound / 8}) for this lambda")
    half = Fraction(1, 2)
    last = eta_last(t_label, r)
    d = [Fraction(x) for x in rs.to_dynkin(lam)]
    zs = set(zero_set(rs, lam))

    L = {(1, j): lam[j - 1] for j in range(1, r + 1)}
    E = {}
    for i in range(1, r + 1):
        if i > 1:
            for j in range(i, r + 1):
                if (i - 1, j) in E:
                    L[i, j] = (E[i - 1, j - 1] + E[i - 1, j]) * half
                else:
                    L[i, j] = E[i - 1, j - 1] * half
            if t_label == "D" and i == 2:
                if case == "1":
                    s = (d[r - 2] + d[r - 1]) * half
                    if r - 1 >= 2:
                        L[2, r - 1] = _aff(s) - dl if symbolic else s - dl
                    L[2, r] = _aff(s) - 3 * dl if symbolic else s - 3 * dl
                elif r - 1 not in zs and r in zs and r >= 3:
                    tt = d[r - 2] * half
                    isolated = len(_component_of(rs, zs, r)) == 1
                    L[2, r - 1] = (tt + dl) if isolated else tt
                    L[2, r] = E[1, r - 1]
                elif r - 1 not in zs and r in zs:
                    L[2, r] = E[1, r - 1]
        for j in range(i, last + 1):
            right = L[i, j + 1] if j + 1 <= r else 0
            E[i, j] = (L[i, j] + right) * half
        if t_label == "D" and i == 1 and case == "1":
            s = (d[r - 2] + d[r - 1]) * half
            E[1, r - 1] = _aff(s) - 2 * dl if symbolic else s - 2 * dl

    lam_rows = tuple(tuple(L[i, j] for j in range(i, r + 1)) for i in range(1, r + 1))
    eta_rows = tuple(tuple(E[i, j] for j in range(i, last + 1)) for i in range(1, r + 1))
    return BZPattern(t_label, r, lam_rows, eta_rows)


# -- affine hull ----------------------------------------------------------------------------------


@dataclass(frozen=True)
class AffineHull:
    dimension: int
    point: tuple
    implicit: tuple  # indices into cs.rows of inequalities that are implicit equalities


def affine_hull(cs):
    """Affine hull of a bounded constraint system via exact LPs.

    Each inequality not yet seen strictly slack is tested by maximizing its
    left-hand side; a maximum equal to the right-hand side marks an implicit
    equality.  The returned point is the average of the slack witnesses, which
    lies in the relative interior.  Raises ``lp.Infeasible`` on empty systems.
    """
    ls = LinearSystem(cs.n, [(c.coeffs, c.rhs, c.rel) for c in cs.rows])
    ineq = [k for k, c in enumerate(cs.rows) if c.rel == ">="]
    strict = set()
    implicit = []
    witnesses = []
    for k in ineq:
        if k in strict:
            continue
        c = cs.rows[k]
        val, x = ls.maximize(c.coeffs, stop_above=c.rhs)
        if val > c.rhs:
            witnesses.append(x)
            strict.update(q for q in ineq if cs.rows[q].slack(x) > 0)
        else:
            implicit.append(k)
    normals = [c.coeffs for c in cs.rows if c.rel == "="] + [cs.rows[k].coeffs for k in implicit]
    dim = cs.n - linalg.rank([list(v) for v in normals])
    if witnesses:
        n = Fraction(len(witnesses))
        point = tuple(sum(col, Fraction(0)) / n for col in zip(*witnesses))
    else:
        point = ls.feasible_point()
    return AffineHull(dim, point, tuple(implicit))


def affine_hull_dimension(cs):
    """``(dimension, relative-interior point)`` of the polytope ``cs``."""
    h = affine_hull(cs)
    return h.dimension, h.point


# -- weight polytope ------------------------------------------------------------------------------


def weight_polytope_contains(rs, lam, mu):
    """Whether ``mu`` lies in the convex hull of the Weyl orbit of ``lam``."""
    lam = linalg.frac_vec(lam)
    mu_plus = dominant_representative(rs, linalg.frac_vec(mu))
    c = rs.to_simple_coords(rs.project(linalg.sub(lam, mu_plus)))
    return c is not None and all(x >= 0 for x in c)
