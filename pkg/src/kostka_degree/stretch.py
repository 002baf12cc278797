"""Stretched Kostka quasi-polynomials: degree prediction, fitting, verification."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .multiplicity import kostka_kostant, stretched_samples
from .rootsys import (
    NotDominating,
    dominant_representative,
    positive_roots_supported_on,
    project_weight,
    simple_root_coefficients,
    subsystem,
)

DEFAULT_PERIODS = (1, 2, 3, 4, 6)


class ZeroFunction:
    """Degree sentinel of the identically zero quasi-polynomial."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    __str__ = __repr__

    def __reduce__(self):
        return (ZeroFunction, ())


ZERO = ZeroFunction()


class FitError(ValueError):
    def __init__(self, message, period=None, residue=None):
        super().__init__(message)
        self.period = period
        self.residue = residue


def _strip(coeffs):
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class QuasiPolynomial:
    """``N -> branches[N % period](N)``; each branch lists coefficients, constant first."""

    period: int
    branches: tuple

    def __post_init__(self):
        if self.period < 1 or len(self.branches) != self.period:
            raise ValueError("need exactly one branch per residue class")
        object.__setattr__(self, "branches", tuple(_strip(b) for b in self.branches))

    @property
    def degree(self):
        degs = [len(b) - 1 for b in self.branches if b]
        return max(degs) if degs else ZERO

    def is_zero(self):
        return self.degree is ZERO

    def evaluate(self, n):
        total = Fraction(0)
        for a in reversed(self.branches[n % self.period]):
            total = total * n + a
        return total

    def __call__(self, n):
        return self.evaluate(n)

    def to_json(self):
        return {
            "period": self.period,
            "branches": [[str(a) for a in b] for b in self.branches],
            "degree": str(self.degree) if self.is_zero() else self.degree,
        }


def _interpolate(points):
    """Coefficients (constant first) of the polynomial through ``points``."""
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    vander = [[x**k for k in range(len(xs))] for x in xs]
    return linalg.solve(vander, ys)


def fit_quasi_polynomial(samples, trial_periods=DEFAULT_PERIODS):
    """Fit ``samples[N - 1]`` (``N = 1..n``) by a quasi-polynomial.

    For each trial period, every residue class is interpolated exactly on all
    but its last two points, which must then be reproduced exactly.  The first
    period that validates wins.
    """
    samples = [int(s) for s in samples]
    n = len(samples)
    last = None
    for p in trial_periods:
        branches = []
        for res in range(p):
            pts = [(N, samples[N - 1]) for N in range(1, n + 1) if N % p == res]
            if len(pts) < 3:
                last = (p, res, f"only {len(pts)} samples in class {res} mod {p}")
                break
            coeffs = _interpolate(pts[:-2])
            poly = QuasiPolynomial(1, (coeffs,))
            if any(poly.evaluate(x) != y for x, y in pts[-2:]):
                last = (p, res, f"class {res} mod {p} fails validation")
                break
            branches.append(coeffs)
        else:
            return QuasiPolynomial(p, tuple(branches))
    p, res, msg = last if last else (None, None, "no trial periods")
    raise FitError(f"no trial period validates: {msg}", period=p, residue=res)


# -- degree prediction -------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeData:
    """The quantities entering the degree formula."""

    c: tuple
    d: tuple
    phi1: tuple  # 1-based simple indices with c_i != 0
    phi2: tuple  # ... and d_i == 0
    phi1_positive: int
    phi2_positive: int

    @property
    def phi1_rank(self):
        return len(self.phi1)

    @property
    def phi2_rank(self):
        return len(self.phi2)

    @property
    def degree(self):
        return self.phi1_positive - self.phi1_rank - self.phi2_positive


def degree_data(rs, lam, mu):
    """``DegreeData`` for the pair, or ``NotDominating``.

    A non-dominant ``mu`` is replaced by its dominant Weyl conjugate, which
    leaves every ``K_{N lam, N mu}`` unchanged.
    """
    lam = linalg.frac_vec(lam)
    mu = dominant_representative(rs, linalg.frac_vec(mu))
    c = simple_root_coefficients(rs, lam, mu)
    if isinstance(c, NotDominating):
        return c
    d = tuple(rs.to_dynkin(lam))
    phi1 = tuple(i + 1 for i, x in enumerate(c) if x != 0)
    phi2 = tuple(i for i in phi1 if d[i - 1] == 0)
    return DegreeData(
        c=c,
        d=d,
        phi1=phi1,
        phi2=phi2,
        phi1_positive=len(positive_roots_supported_on(rs, phi1)),
        phi2_positive=len(positive_roots_supported_on(rs, phi2)),
    )


def predicted_degree(rs, lam, mu):
    """``|Phi1_+| - rk Phi1 - |Phi2_+|``, or ``NotDominating`` if ``lam`` does not dominate ``mu``."""
    data = degree_data(rs, lam, mu)
    return data if isinstance(data, NotDominating) else data.degree


def default_nmax(pred):
    if isinstance(pred, int):
        return 2 * (pred + 2) + 2
    return 8


# -- factorization ----------------------------------------------------------------------


@dataclass(frozen=True)
class ComponentPair:
    label: str  # e.g. "A2"
    indices: tuple  # 1-based simple indices in the parent
    root_system: object
    lam: tuple
    mu: tuple


@dataclass(frozen=True)
class PairDecomposition:
    root_system: object
    lam: tuple
    mu: tuple
    components: tuple

    def kostka(self):
        out = 1
        for comp in self.components:
            out *= kostka_kostant(comp.root_system, comp.lam, comp.mu)
        return out

    def degree(self):
        return sum(predicted_degree(comp.root_system, comp.lam, comp.mu) for comp in self.components)


def factorize_pair(rs, lam, mu):
    """Split a dominating pair into primitive pairs on the irreducible pieces of ``Phi1``."""
    lam = linalg.frac_vec(lam)
    mu = linalg.frac_vec(mu)
    c = simple_root_coefficients(rs, lam, mu)
    if isinstance(c, NotDominating):
        return c
    comps = []
    for comp in rs.components([i for i, x in enumerate(c) if x != 0]):
        idx = tuple(i + 1 for i in comp)
        sub = subsystem(rs, idx)
        comps.append(
            ComponentPair(
                label=sub.type_label,
                indices=idx,
                root_system=sub,
                lam=project_weight(rs, idx, lam),
                mu=project_weight(rs, idx, mu),
            )
        )
    return PairDecomposition(rs, lam, mu, tuple(comps))


# -- verification ------------------------------------------------------------------------


MATCH, MISMATCH, SKIPPED = "match", "mismatch", "skipped"


def _verdict(ok):
    return MATCH if ok else MISMATCH


def _q(x):
    return str(Fraction(x))


@dataclass
class DegreeReport:
    type_label: str
    rank: int
    lam: tuple
    mu: tuple
    predicted: object  # int or NotDominating
    data: object = None  # DegreeData or None
    samples: dict = field(default_factory=dict)  # method -> list of ints
    n_max: int = 0
    fitted: QuasiPolynomial = None
    fit_error: str = None
    geometric_dimension: object = None  # int, "EMPTY" or None
    verdicts: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(v != MISMATCH for v in self.verdicts.values())

    def to_json(self):
        pred = self.predicted
        out = {
            "type": self.type_label,
            "rank": self.rank,
            "lambda": [_q(x) for x in self.lam],
            "mu": [_q(x) for x in self.mu],
            "predicted_degree": pred if isinstance(pred, int) else "NOT_DOMINATING",
            "n_max": self.n_max,
            "samples": {k: list(s) for k, s in self.samples.items()},
            "fitted": self.fitted.to_json() if self.fitted is not None else None,
            "fit_error": self.fit_error,
            "geometric_dimension": self.geometric_dimension,
            "verdicts": dict(self.verdicts),
            "ok": self.ok,
        }
        if isinstance(pred, NotDominating):
            out["not_dominating"] = {"reason": pred.reason, "coefficients": [_q(x) for x in pred.coefficients]}
        if self.data is not None:
            dd = self.data
            out.update(
                {
                    "c": [_q(x) for x in dd.c],
                    "d": [_q(x) for x in dd.d],
                    "phi1": {"simple": list(dd.phi1), "positive_roots": dd.phi1_positive, "rank": dd.phi1_rank},
                    "phi2": {"simple": list(dd.phi2), "positive_roots": dd.phi2_positive, "rank": dd.phi2_rank},
                }
            )
        return out


def _degree_matches(pred, deg):
    if isinstance(pred, NotDominating):
        return deg is ZERO or deg == "EMPTY"
    return deg == pred


def verify_pair(
    rs,
    lam,
    mu,
    n_max=None,
    methods=("auto",),
    trial_periods=DEFAULT_PERIODS,
    geometric=True,
    expect=None,
    threads=1,
):
    """Compare predicted degree, fitted degree and (types B/C/D) ``dim BZ_{lam,mu}``.

    ``expect`` adds one more comparison against a caller-supplied degree.
    When the fit fails at the default ``n_max`` the sample range is doubled once.
    """
    lam = linalg.frac_vec(lam)
    mu = linalg.frac_vec(mu)
    data = degree_data(rs, lam, mu)
    pred = data if isinstance(data, NotDominating) else data.degree
    rep = DegreeReport(
        rs.type_label, rs.rank, lam, mu, pred, data=None if isinstance(data, NotDominating) else data
    )
    auto_raise = n_max is None
    n = default_nmax(pred) if n_max is None else int(n_max)
    while True:
        rep.samples = {m: stretched_samples(rs, lam, mu, n, method=m, threads=threads) for m in methods}
        rep.n_max = n
        first = rep.samples[methods[0]]
        try:
            rep.fitted = fit_quasi_polynomial(first, trial_periods)
            rep.fit_error = None
            break
        except FitError as exc:
            rep.fit_error = str(exc)
            if not auto_raise:
                break
            auto_raise = False
            n *= 2
    if len(methods) > 1:
        rep.verdicts["methods_agree"] = _verdict(all(s == first for s in rep.samples.values()))
    fit_deg = rep.fitted.degree if rep.fitted is not None else None
    # off the root lattice K(N) can vanish on some residues only; no prediction applies
    off_lattice = isinstance(pred, NotDominating) and pred.reason == "non-integral"
    if off_lattice:
        rep.verdicts["fit_vs_predicted"] = SKIPPED
    else:
        rep.verdicts["fit_vs_predicted"] = _verdict(fit_deg is not None and _degree_matches(pred, fit_deg))

    if geometric and rs.type_label in ("B", "C", "D") and not off_lattice:
        from .bzgeom import affine_hull, constraint_system_bz
        from .lp import Infeasible

        try:
            rep.geometric_dimension = affine_hull(constraint_system_bz(rs, lam, mu)).dimension
        except Infeasible:
            rep.geometric_dimension = "EMPTY"
        g = rep.geometric_dimension
        rep.verdicts["geometric_vs_predicted"] = _verdict(_degree_matches(pred, ZERO if g == "EMPTY" else g))
        if fit_deg is not None:
            same = (fit_deg is ZERO and g == "EMPTY") or fit_deg == g
            rep.verdicts["fit_vs_geometric"] = _verdict(same)
        else:
            rep.verdicts["fit_vs_geometric"] = SKIPPED
    else:
        rep.verdicts["geometric_vs_predicted"] = SKIPPED
        rep.verdicts["fit_vs_geometric"] = SKIPPED
    if expect is not None:
        rep.verdicts["expected"] = _verdict(isinstance(pred, int) and pred == int(expect))
    return rep
