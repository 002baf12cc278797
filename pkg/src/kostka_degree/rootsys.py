"""Root systems of classical type (and G2), Weyl groups, subsystems, weights.

Weights are plain tuples of ``Fraction`` in the ambient (epsilon) coordinates.
Three coordinate systems appear throughout:

* ambient: ``e_1, ..., e_n`` coordinates, inner product given by ``gram``;
* Dynkin (fundamental-weight) coordinates: ``d_i = <v, alpha_i^vee>``;
* simple-root coordinates: ``v = sum_i x_i alpha_i``.

Classical types follow the usual conventions: ``alpha_i = e_i - e_{i+1}`` and
the last simple root is ``e_r`` (B), ``2 e_r`` (C) or ``e_{r-1} + e_r`` (D).
Type ``A_r`` lives in ``r + 1`` coordinates and weights are normalized to
trace zero on input.  ``G2`` is realized in its 2-dimensional simple-root
basis with Gram matrix ``[[2, -3], [-3, 6]]`` so that everything stays rational.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import linalg

WEYL_RANK_CAP = 6
CLASSICAL_TYPES = ("A", "B", "C", "D")

WeightVector = tuple  # tuple[Fraction, ...] in ambient coordinates


class UnsupportedRootSystem(ValueError):
    pass


class WeylGroupTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class NotDominating:
    """Returned when ``lambda - mu`` is not a nonnegative integral root combination.

    ``reason`` is ``"negative"`` or ``"non-integral"``; ``coefficients`` holds
    the rational simple-root coefficients that were found.
    """

    reason: str
    coefficients: tuple


@dataclass(frozen=True, eq=False)
class RootSystem:
    type_label: str
    rank: int
    simple_roots: tuple
    positive_roots: tuple
    positive_coords: tuple  # positive roots in simple-root coordinates (ints)
    cartan_matrix: tuple  # cartan_matrix[i][j] = <alpha_j, alpha_i^vee>
    fundamental_weights: tuple
    ambient_dim: int
    gram: tuple
    labels: tuple = field(default=())  # 1-based indices in the parent system

    @classmethod
    def from_simple_roots(cls, type_label, simple_roots, gram=None, labels=None):
        simple_roots = tuple(linalg.frac_vec(a) for a in simple_roots)
        n = len(simple_roots[0]) if simple_roots else 0
        if gram is None:
            gram = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
        else:
            gram = tuple(linalg.frac_vec(row) for row in gram)
        r = len(simple_roots)

        def ip(u, v):
            return linalg.dot(u, linalg.matvec(gram, v))

        cartan = []
        for i in range(r):
            ai = simple_roots[i]
            nrm = ip(ai, ai)
            row = []
            for j in range(r):
                val = 2 * ip(simple_roots[j], ai) / nrm
                if val.denominator != 1:
                    raise UnsupportedRootSystem("simple roots do not form a crystallographic system")
                row.append(int(val))
            cartan.append(tuple(row))
        cartan = tuple(cartan)

        coords = _positive_root_closure(cartan)
        pos = tuple(_combine(x, simple_roots, n) for x in coords)
        if r:
            cinv = linalg.inverse(cartan)
            fws = tuple(
                _combine([cinv[j][i] for j in range(r)], simple_roots, n) for i in range(r)
            )
        else:
            fws = ()
        if labels is None:
            labels = tuple(range(1, r + 1))
        return cls(
            type_label=type_label,
            rank=r,
            simple_roots=simple_roots,
            positive_roots=pos,
            positive_coords=coords,
            cartan_matrix=cartan,
            fundamental_weights=fws,
            ambient_dim=n,
            gram=gram,
            labels=tuple(labels),
        )

    # -- inner products and coordinates ------------------------------------

    def inner(self, u, v):
        return linalg.dot(u, linalg.matvec(self.gram, v))

    @cached_property
    def coroots(self):
        return tuple(
            linalg.scale(Fraction(2) / self.inner(a, a), a) for a in self.simple_roots
        )

    @cached_property
    def cartan_inverse(self):
        return linalg.inverse(self.cartan_matrix) if self.rank else []

    @cached_property
    def rho(self):
        n = self.ambient_dim
        total = tuple(Fraction(0) for _ in range(n))
        for a in self.positive_roots:
            total = linalg.add(total, a)
        return linalg.scale(Fraction(1, 2), total)

    def to_dynkin(self, v):
        """Fundamental-weight coordinates ``<v, alpha_i^vee>``."""
        return tuple(self.inner(v, c) for c in self.coroots)

    def from_dynkin(self, d):
        v = tuple(Fraction(0) for _ in range(self.ambient_dim))
        for di, w in zip(d, self.fundamental_weights):
            if di:
                v = linalg.add(v, linalg.scale(Fraction(di), w))
        return v

    def to_simple_coords(self, v):
        """Coefficients ``x`` with ``v = sum x_i alpha_i``, or ``None`` if ``v`` is off the span."""
        v = linalg.frac_vec(v)
        x = linalg.vecmat(self.to_dynkin(v), linalg.transpose(self.cartan_inverse)) if self.rank else ()
        if _combine(x, self.simple_roots, self.ambient_dim) != v:
            return None
        return x

    def from_simple_coords(self, x):
        return _combine(x, self.simple_roots, self.ambient_dim)

    def project(self, v):
        """Orthogonal projection onto the span of the simple roots."""
        return _project(self, range(self.rank), linalg.frac_vec(v))

    def weight(self, coords):
        """Ambient weight from user coordinates (type A is normalized to trace zero)."""
        v = linalg.frac_vec(coords)
        if len(v) != self.ambient_dim:
            raise ValueError(f"expected {self.ambient_dim} coordinates, got {len(v)}")
        if self.type_label == "A":
            mean = sum(v, Fraction(0)) / len(v)
            v = tuple(x - mean for x in v)
        return v

    def is_dominant(self, v):
        return all(d >= 0 for d in self.to_dynkin(v))

    def is_integral(self, v):
        return all(d.denominator == 1 for d in self.to_dynkin(v))

    # -- structure -----------------------------------------------------------

    def adjacent(self, i, j):
        """Dynkin adjacency of 0-based simple indices."""
        return i != j and self.cartan_matrix[i][j] != 0

    def components(self, indices=None):
        """Connected components (0-based index lists) of the Dynkin subdiagram on ``indices``."""
        if indices is None:
            indices = range(self.rank)
        remaining = sorted(set(indices))
        comps = []
        while remaining:
            stack = [remaining.pop(0)]
            comp = set(stack)
            while stack:
                i = stack.pop()
                for j in list(remaining):
                    if self.adjacent(i, j):
                        remaining.remove(j)
                        comp.add(j)
                        stack.append(j)
            comps.append(sorted(comp))
        return comps

    def component_types(self):
        """List of ``(label, labels)`` for each irreducible component, e.g. ``("B2", (4, 5))``."""
        out = []
        for comp in self.components():
            sub = [[self.cartan_matrix[i][j] for j in comp] for i in comp]
            out.append((_classify(sub, self.type_label), tuple(self.labels[i] for i in comp)))
        return out

    def __repr__(self):
        return f"RootSystem({self.type_label}, rank={self.rank})"


def _combine(x, vectors, n):
    out = [Fraction(0)] * n
    for c, v in zip(x, vectors):
        if c:
            for k in range(n):
                out[k] += c * v[k]
    return tuple(out)


def _positive_root_closure(cartan):
    r = len(cartan)
    simples = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    seen = set(simples)
    queue = deque(simples)
    while queue:
        x = queue.popleft()
        for i in range(r):
            pairing = sum(cartan[i][j] * x[j] for j in range(r))
            if pairing == 0:
                continue
            y = list(x)
            y[i] -= pairing
            y = tuple(y)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return tuple(sorted(x for x in seen if all(c >= 0 for c in x)))


def _project(rs, idx, v):
    idx = list(idx)
    if not idx:
        return tuple(Fraction(0) for _ in v)
    basis = [rs.simple_roots[i] for i in idx]
    g = [[rs.inner(a, b) for b in basis] for a in basis]
    rhs = [rs.inner(a, v) for a in basis]
    y = linalg.solve(g, rhs)
    return _combine(y, basis, rs.ambient_dim)


def _classify(sub, parent_label):
    n = len(sub)
    if n == 1:
        return "A1"
    bonds = {}
    for i in range(n):
        for j in range(i + 1, n):
            if sub[i][j]:
                bonds[(i, j)] = sub[i][j] * sub[j][i]
    deg = [sum(1 for (a, b) in bonds if i in (a, b)) for i in range(n)]
    if 3 in bonds.values():
        return "G2"
    if 2 in bonds.values():
        if n == 2:
            return ("C" if parent_label.startswith("C") else "B") + "2"
        (i, j), = [k for k, v in bonds.items() if v == 2]
        # sub[i][j] = <alpha_j, alpha_i^vee>; |sub| = 2 means alpha_j is the long one
        long_node = j if abs(sub[i][j]) == 2 else i
        short_node = i if long_node == j else j
        return ("B" if deg[short_node] == 1 else "C") + str(n)
    if max(deg) == 3:
        return f"D{n}"
    return f"A{n}"


# -- construction -------------------------------------------------------------


def build_root_system(type_label, rank=None):
    """Root system of type ``A_r``, ``B_r``, ``C_r``, ``D_r`` or ``G2``."""
    t = str(type_label).upper()
    if t == "G2" or t == "G":
        if rank not in (None, 2):
            raise UnsupportedRootSystem("G2 has rank 2")
        return RootSystem.from_simple_roots("G2", [(1, 0), (0, 1)], gram=[(2, -3), (-3, 6)])
    if t not in CLASSICAL_TYPES:
        raise UnsupportedRootSystem(f"unsupported type {type_label!r}")
    if rank is None or int(rank) != rank:
        raise UnsupportedRootSystem("rank must be an integer")
    r = int(rank)
    if r < 1 or (t in "BCD" and r < 2):
        raise UnsupportedRootSystem(f"unsupported rank {rank} for type {t}")

    def e(i, n):
        return [int(k == i) for k in range(n)]

    if t == "A":
        n = r + 1
        simple = [[a - b for a, b in zip(e(i, n), e(i + 1, n))] for i in range(r)]
    else:
        n = r
        simple = [[a - b for a, b in zip(e(i, n), e(i + 1, n))] for i in range(r - 1)]
        if t == "B":
            simple.append(e(r - 1, n))
        elif t == "C":
            simple.append([2 * x for x in e(r - 1, n)])
        else:
            simple.append([a + b for a, b in zip(e(r - 2, n), e(r - 1, n))])
    return RootSystem.from_simple_roots(t, simple)


def subsystem(rs, simple_subset):
    """Root subsystem generated by the simple roots with 1-based indices ``simple_subset``.

    The result is a ``RootSystem`` in the same ambient space; its ``labels``
    record the parent indices and ``component_types()`` gives the irreducible
    decomposition.
    """
    idx = sorted({int(i) for i in simple_subset})
    for i in idx:
        if not 1 <= i <= rs.rank:
            raise ValueError(f"simple index {i} out of range")
    if not idx:
        return _empty(rs)
    roots = [rs.simple_roots[i - 1] for i in idx]
    tmp = RootSystem.from_simple_roots(rs.type_label, roots, gram=rs.gram, labels=idx)
    label = "+".join(lab for lab, _ in tmp.component_types())
    return RootSystem.from_simple_roots(label, roots, gram=rs.gram, labels=idx)


def _empty(rs):
    return RootSystem(
        type_label="0",
        rank=0,
        simple_roots=(),
        positive_roots=(),
        positive_coords=(),
        cartan_matrix=(),
        fundamental_weights=(),
        ambient_dim=rs.ambient_dim,
        gram=rs.gram,
        labels=(),
    )


def positive_roots_supported_on(rs, simple_subset):
    """Positive roots of ``rs`` whose support lies in the 1-based ``simple_subset``."""
    allowed = {i - 1 for i in simple_subset}
    return tuple(
        a
        for a, x in zip(rs.positive_roots, rs.positive_coords)
        if all(c == 0 or i in allowed for i, c in enumerate(x))
    )


def project_weight(rs, simple_subset, w):
    """Orthogonal projection of ``w`` onto the span of ``{alpha_i : i in simple_subset}``."""
    return _project(rs, [i - 1 for i in sorted(set(simple_subset))], linalg.frac_vec(w))


# -- Weyl group ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class WeylGroup:
    """All Weyl group elements as integer matrices acting on Dynkin coordinates.

    ``matrices[k] @ d`` is the Dynkin vector of ``w_k(v)`` when ``d`` is that
    of ``v``.  ``dets[k]`` is ``(-1)^length``.
    """

    root_system: RootSystem
    matrices: np.ndarray
    dets: np.ndarray
    lengths: np.ndarray

    def __len__(self):
        return len(self.dets)

    def ambient_matrix(self, k):
        """Element ``k`` as a rational matrix on ambient coordinates.

        Acts as the identity on the orthogonal complement of the root span.
        """
        rs = self.root_system
        n = rs.ambient_dim
        m = self.matrices[k]
        cols = []
        for j in range(n):
            ej = tuple(Fraction(int(i == j)) for i in range(n))
            base = rs.project(ej)
            d = rs.to_dynkin(base)
            wd = [sum((int(m[i, q]) * d[q] for q in range(rs.rank)), Fraction(0)) for i in range(rs.rank)]
            cols.append(linalg.add(rs.from_dynkin(wd), linalg.sub(ej, base)))
        return [[cols[j][i] for j in range(n)] for i in range(n)]


def simple_reflection_matrices(rs):
    r = rs.rank
    mats = []
    for i in range(r):
        s = np.eye(r, dtype=np.int64)
        # s_i(d) = d - d_i * (Dynkin vector of alpha_i); alpha_i has Dynkin coords C[:, i]
        for k in range(r):
            s[k, i] -= rs.cartan_matrix[k][i]
        mats.append(s)
    return mats


_WEYL_CACHE = {}


def weyl_group(rs, cap=WEYL_RANK_CAP):
    """Breadth-first closure of the simple reflections.

    Elements are deduplicated by their image of ``rho`` (a regular weight, so
    the orbit map is injective).
    """
    if rs.rank > cap:
        raise WeylGroupTooLarge(f"rank {rs.rank} exceeds Weyl group cap {cap}")
    key = (rs.cartan_matrix,)
    if key in _WEYL_CACHE:
        mats, dets, lengths = _WEYL_CACHE[key]
        return WeylGroup(rs, mats, dets, lengths)
    r = rs.rank
    gens = simple_reflection_matrices(rs)
    rho = np.ones(r, dtype=np.int64)
    ident = np.eye(r, dtype=np.int64)
    seen = {tuple(rho): 0}
    mats = [ident]
    lengths = [0]
    queue = deque([0])
    while queue:
        k = queue.popleft()
        m = mats[k]
        for s in gens:
            new = s @ m
            img = tuple(new @ rho)
            if img not in seen:
                seen[img] = len(mats)
                mats.append(new)
                lengths.append(lengths[k] + 1)
                queue.append(len(mats) - 1)
    mats = np.array(mats, dtype=np.int64).reshape(len(mats), r, r)
    lengths = np.array(lengths, dtype=np.int64)
    dets = np.where(lengths % 2 == 0, 1, -1)
    _WEYL_CACHE[key] = (mats, dets, lengths)
    return WeylGroup(rs, mats, dets, lengths)


def weyl_group_order(type_label, rank):
    from math import factorial

    if type_label == "A":
        return factorial(rank + 1)
    if type_label in ("B", "C"):
        return 2**rank * factorial(rank)
    if type_label == "D":
        return 2 ** (rank - 1) * factorial(rank)
    if type_label == "G2":
        return 12
    raise UnsupportedRootSystem(type_label)


# -- weights ------------------------------------------------------------------


def simple_root_coefficients(rs, lam, mu):
    """Solve ``lam - mu = sum c_i alpha_i``.

    Returns a tuple of ints when every ``c_i`` is a nonnegative integer and a
    ``NotDominating`` value otherwise.  Raises ``ValueError`` if ``lam - mu`` is
    not in the span of the roots.
    """
    diff = linalg.sub(linalg.frac_vec(lam), linalg.frac_vec(mu))
    c = rs.to_simple_coords(diff)
    if c is None:
        raise ValueError("lambda - mu is not in the span of the simple roots")
    if any(x.denominator != 1 for x in c):
        return NotDominating("non-integral", c)
    if any(x < 0 for x in c):
        return NotDominating("negative", c)
    return tuple(int(x) for x in c)


def dominates(rs, lam, mu):
    return not isinstance(simple_root_coefficients(rs, lam, mu), NotDominating)


def is_primitive(rs, lam, mu):
    c = simple_root_coefficients(rs, lam, mu)
    if isinstance(c, NotDominating):
        return False
    return all(x > 0 for x in c)


def dominant_representative(rs, mu):
    """The dominant weight in the Weyl orbit of ``mu`` (simple-reflection descent)."""
    mu = linalg.frac_vec(mu)
    d = list(rs.to_dynkin(mu))
    base = rs.project(mu)
    rest = linalg.sub(mu, base)
    while True:
        i = next((k for k, x in enumerate(d) if x < 0), None)
        if i is None:
            break
        di = d[i]
        for k in range(rs.rank):
            d[k] -= di * rs.cartan_matrix[k][i]
    return linalg.add(rs.from_dynkin(d), rest)


def support(rs, coords):
    """1-based indices of the simple roots with nonzero coefficient."""
    return tuple(i + 1 for i, x in enumerate(coords) if x != 0)


def dominant_weights_below(rs, lam):
    """All dominant ``mu`` with ``lam - mu`` a nonnegative integral root combination.

    Dominant weights have nonnegative simple-root coordinates, so every
    coefficient of ``lam - mu`` is bounded by the matching coordinate of ``lam``.
    """
    lam = linalg.frac_vec(lam)
    x = rs.to_simple_coords(rs.project(lam))
    out = []
    for c in itertools.product(*(range(int(v) + 1) for v in x)):
        mu = linalg.sub(lam, rs.from_simple_coords(c))
        if rs.is_dominant(mu):
            out.append(mu)
    return out
