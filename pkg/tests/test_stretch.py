import json
import random
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, strategies as st

from kostka_degree import linalg
from kostka_degree.multiplicity import kostka_kostant, stretched_samples
from kostka_degree.rootsys import NotDominating, build_root_system, dominates, is_primitive
from kostka_degree.stretch import (
    ZERO,
    FitError,
    QuasiPolynomial,
    degree_data,
    default_nmax,
    factorize_pair,
    fit_quasi_polynomial,
    predicted_degree,
    verify_pair,
)


def test_fit_examples():
    q = fit_quasi_polynomial([1] * 6)
    assert (q.period, q.branches, q.degree) == (1, ((1,),), 0)
    q = fit_quasi_polynomial([2, 3, 4, 5, 6, 7])
    assert (q.period, q.branches, q.degree) == (1, ((1, 1),), 1)
    q = fit_quasi_polynomial([0] * 6)
    assert q.degree is ZERO and q.is_zero()


def test_fit_b2_adjoint_like():
    b2 = build_root_system("B", 2)
    q = fit_quasi_polynomial(stretched_samples(b2, b2.from_dynkin((0, 2)), (0, 0), 8))
    assert q.period == 1 and q.branches == ((1, 1),) and q.degree == 1


def test_fit_period_two():
    # floor(N/2) + 1
    samples = [n // 2 + 1 for n in range(1, 13)]
    q = fit_quasi_polynomial(samples)
    assert q.period == 2 and q.degree == 1
    assert all(q(n) == s for n, s in enumerate(samples, start=1))


def test_fit_failure_reports_class():
    with pytest.raises(FitError) as e:
        fit_quasi_polynomial([1, 2, 4, 8, 16, 32, 64, 128], trial_periods=(1, 2))
    assert e.value.period in (1, 2) and e.value.residue is not None


@given(
    st.integers(1, 3),
    st.lists(st.lists(st.integers(-5, 5), min_size=1, max_size=4), min_size=3, max_size=3),
)
def test_fit_recovers_quasi_polynomials(p, coeff_lists):
    qp = QuasiPolynomial(p, tuple(coeff_lists[:p]))
    deg = max(len(c) for c in coeff_lists[:p]) - 1
    n = p * (deg + 3) + p
    samples = [qp(k) for k in range(1, n + 1)]
    got = fit_quasi_polynomial([int(s) for s in samples])
    assert all(got(k) == s for k, s in enumerate(samples, start=1))
    assert got.degree == qp.degree
    assert p % got.period == 0


def test_quasi_polynomial_strips_and_serializes():
    q = QuasiPolynomial(2, ((1, 0, 0), (F(1, 2), 3)))
    assert q.branches == ((1,), (F(1, 2), 3))
    js = q.to_json()
    assert js == {"period": 2, "branches": [["1"], ["1/2", "3"]], "degree": 1}
    assert QuasiPolynomial(1, ((),)).to_json()["degree"] == "ZERO"
    with pytest.raises(ValueError):
        QuasiPolynomial(2, ((1,),))


def test_predicted_degree_examples():
    a2 = build_root_system("A", 2)
    assert predicted_degree(a2, a2.from_dynkin((1, 1)), (0, 0, 0)) == 1
    b2 = build_root_system("B", 2)
    data = degree_data(b2, b2.from_dynkin((0, 2)), (0, 0))
    assert data.c == (1, 2) and data.d == (0, 2)
    assert (data.phi1_positive, data.phi1_rank, data.phi2_positive) == (4, 2, 1)
    assert data.degree == 1
    assert predicted_degree(b2, (1, 0), (1, 0)) == 0
    nd = predicted_degree(b2, (1, 0), (1, 1))
    assert isinstance(nd, NotDominating) and nd.reason == "negative"


def test_default_nmax():
    assert default_nmax(0) == 6
    assert default_nmax(3) == 12


def test_factorize_examples():
    a3 = build_root_system("A", 3)
    lam, mu = a3.from_dynkin((2, 0, 2)), a3.from_dynkin((0, 2, 0))
    dec = factorize_pair(a3, lam, mu)
    assert [(c.label, c.indices) for c in dec.components] == [("A1", (1,)), ("A1", (3,))]
    assert dec.kostka() == kostka_kostant(a3, lam, mu)
    eq = factorize_pair(a3, lam, lam)
    assert eq.components == () and eq.kostka() == 1 and eq.degree() == 0
    b3 = build_root_system("B", 3)
    lam = b3.from_dynkin((1, 0, 2))
    dec = factorize_pair(b3, lam, b3.from_dynkin((1, 0, 0)))
    assert len(dec.components) == 1 and dec.components[0].label == "B3"
    assert isinstance(factorize_pair(b3, (1, 0, 0), (2, 0, 0)), NotDominating)


def _dominant_pairs(rs, bound=2):
    import itertools

    r = rs.rank
    for dl in itertools.product(range(bound + 1), repeat=r):
        lam = rs.from_dynkin(dl)
        for dm in itertools.product(range(bound + 1), repeat=r):
            mu = rs.from_dynkin(dm)
            if dominates(rs, lam, mu):
                yield lam, mu


@pytest.mark.parametrize("t,r", [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
def test_factorization_identities_exhaustive(t, r):
    rs = build_root_system(t, r)
    for lam, mu in _dominant_pairs(rs):
        dec = factorize_pair(rs, lam, mu)
        assert dec.kostka() == kostka_kostant(rs, lam, mu)
        assert dec.degree() == predicted_degree(rs, lam, mu)
        c = [x for x in rs.to_simple_coords(linalg.sub(lam, mu))]
        assert sorted(i for comp in dec.components for i in comp.indices) == [
            i + 1 for i, x in enumerate(c) if x
        ]
        for comp in dec.components:
            assert is_primitive(comp.root_system, comp.lam, comp.mu)


@given(st.sampled_from([("A", 3), ("B", 3), ("C", 4), ("D", 5), ("G2", 2)]), st.data())
def test_predicted_degree_nonnegative(tr, data):
    t, r = tr
    rs = build_root_system(t, r)
    lam = rs.from_dynkin(data.draw(st.lists(st.integers(0, 3), min_size=r, max_size=r)))
    c = data.draw(st.lists(st.integers(0, 3), min_size=r, max_size=r))
    mu = linalg.sub(lam, rs.from_simple_coords(c))
    assume(rs.is_dominant(mu))
    pred = predicted_degree(rs, lam, mu)
    assert isinstance(pred, int) and pred >= 0


def test_verify_examples():
    a2 = build_root_system("A", 2)
    rep = verify_pair(a2, a2.from_dynkin((1, 1)), (0, 0, 0), methods=("kostant", "ssyt"))
    assert rep.ok and rep.predicted == 1 and rep.fitted.degree == 1
    assert rep.verdicts["methods_agree"] == "match"
    assert rep.verdicts["geometric_vs_predicted"] == "skipped"
    b2 = build_root_system("B", 2)
    rep = verify_pair(b2, (1, 0), (1, 0))
    assert rep.ok and rep.predicted == 0 and rep.fitted.branches == ((1,),)
    assert rep.geometric_dimension == 0


def test_verify_c3_primitive_pair():
    c3 = build_root_system("C", 3)
    lam, mu = c3.from_dynkin((1, 1, 1)), c3.from_dynkin((0, 2, 0))
    rep = verify_pair(c3, lam, mu)
    assert rep.data.c == (1, 1, 1)
    assert rep.ok and rep.predicted == rep.fitted.degree == rep.geometric_dimension == 6


def test_verify_not_dominating():
    b2 = build_root_system("B", 2)
    rep = verify_pair(b2, (1, 0), (1, 1))
    assert rep.ok and rep.fitted.is_zero() and rep.geometric_dimension == "EMPTY"
    a3 = build_root_system("A", 3)
    rep = verify_pair(a3, a3.from_dynkin((1, 0, 1)), a3.from_dynkin((0, 1, 0)))
    assert rep.predicted.reason == "non-integral"
    assert rep.verdicts["fit_vs_predicted"] == "skipped"


def test_verify_expect_mismatch_and_json():
    a2 = build_root_system("A", 2)
    rep = verify_pair(a2, a2.from_dynkin((1, 1)), (0, 0, 0), expect=7)
    assert not rep.ok and rep.verdicts["expected"] == "mismatch"
    js = json.loads(json.dumps(rep.to_json()))
    assert js["predicted_degree"] == 1 and js["ok"] is False
    assert set(js["verdicts"].values()) <= {"match", "mismatch", "skipped"}


def test_verify_auto_raises_nmax():
    b3 = build_root_system("B", 3)
    lam = b3.from_dynkin((0, 1, 0))
    rep = verify_pair(b3, lam, (0, 0, 0), trial_periods=(2,))
    assert rep.ok and rep.n_max == default_nmax(4)
    # a budget that is too small fails when fixed, and is doubled once when automatic
    fixed = verify_pair(b3, lam, (0, 0, 0), n_max=8, geometric=False)
    assert fixed.fitted is None and fixed.fit_error and not fixed.ok


def test_type_a_is_polynomial_on_random_pairs():
    rng = random.Random(5)
    for _ in range(10):
        r = rng.randint(1, 3)
        rs = build_root_system("A", r)
        lam = rs.from_dynkin([rng.randint(0, 2) for _ in range(r)])
        mu = linalg.sub(lam, rs.from_simple_coords([rng.randint(0, 2) for _ in range(r)]))
        rep = verify_pair(rs, lam, mu)
        assert rep.ok and rep.fitted.period == 1
