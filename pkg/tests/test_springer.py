import cmath
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from springer_torus.exact_linear import RationalMatrix, is_positive_definite
from springer_torus.springer import (
    CharacterCombo,
    NotAlmostFaithfulError,
    TorusPoint,
    coefficients,
    evaluate,
    identity_report,
    moment_vector,
    s_matrix_bruteforce,
    s_matrix_closed,
    springer_torus,
    symplectic_diagonal,
    torus_from_symplectic_eigenvalues,
    x_long,
)
from springer_torus.repweights import expand, freudenthal

from conftest import grid_instances, multiset, rs_of

F = Fraction
e = CharacterCombo.character


class TestCharacterCombo:
    def test_zero_terms_dropped(self):
        c = CharacterCombo({(1,): 1, (-1,): 0})
        assert c.terms == {(1,): 1}
        assert (c - c) == CharacterCombo()
        assert c * 0 == 0

    def test_arithmetic(self):
        a = e((1, 0)) + e((0, 1)) * F(1, 2)
        b = e((0, 1)) * F(-1, 2)
        assert a + b == e((1, 0))
        assert 3 * a == a * 3 == a + a + a
        assert a / 2 == a * F(1, 2)
        assert -a + a == 0

    @given(st.lists(st.tuples(st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
                              st.fractions(max_denominator=9)), max_size=6),
           st.fractions(max_denominator=9), st.fractions(max_denominator=9))
    def test_vector_space_laws(self, terms, p, q):
        a = CharacterCombo(terms)
        b = CharacterCombo([(mu, c * 2) for mu, c in terms[::-1]])
        assert a + b == b + a
        assert (a + b) * p == a * p + b * p
        assert a * (p + q) == a * p + a * q


def test_evaluate_examples():
    c = CharacterCombo({(1, 0): F(2), (0, -3): F(-1, 2), (2, 2): F(1, 7)})
    assert evaluate(c, TorusPoint((1, 1))) == pytest.approx(2 - 0.5 + 1 / 7, rel=1e-15)
    assert evaluate(e((1, -1)), TorusPoint((2, 4))) == pytest.approx(0.5)
    assert evaluate(CharacterCombo(), TorusPoint((2, 4))) == 0
    with pytest.raises(ValueError):
        TorusPoint((1, 0))
    with pytest.raises(ValueError):
        evaluate(e((1, 1)), TorusPoint((1, 2, 3)))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=3, max_size=3),
       st.lists(st.complex_numbers(min_magnitude=0.3, max_magnitude=3), min_size=3, max_size=3))
def test_evaluate_character_against_direct_power(mu, z):
    direct = 1
    for zi, m in zip(z, mu):
        direct *= zi ** m
    assert cmath.isclose(evaluate(e(mu), TorusPoint(tuple(z))), direct, rel_tol=1e-12, abs_tol=1e-300)


def test_moment_vector_examples():
    rs, wm = multiset("A1", (1,))
    assert moment_vector(rs, wm) == [e((1,)) - e((-1,))]
    rs, wm = multiset("C2", (1, 0))
    assert moment_vector(rs, wm)[1] == e((-1, 1)) - e((1, -1))
    rs = rs_of("B3")
    assert moment_vector(rs, freudenthal(rs, (0, 0, 0))) == [CharacterCombo()] * 3


def test_s_matrix_examples():
    rs, wm = multiset("C2", (1, 0))
    assert s_matrix_bruteforce(rs, wm) == RationalMatrix([[4, -2], [-2, 2]])
    assert s_matrix_closed(rs, wm) == RationalMatrix([[4, -2], [-2, 2]])
    rs, wm = multiset("A1", (2,))
    assert s_matrix_bruteforce(rs, wm) == RationalMatrix([[8]])
    rs = rs_of("F4")
    zero = freudenthal(rs, (0,) * 4)
    assert s_matrix_bruteforce(rs, zero) == RationalMatrix.zeros(4)
    assert s_matrix_closed(rs, zero) == RationalMatrix.zeros(4)


@pytest.mark.parametrize("lam", [(1, 0), (0, 1), (1, 1), (2, 0)])
def test_g2_closed_form_shape(lam):
    rs, wm = multiset("G2", lam)
    x = sum(m * mu[1] ** 2 for mu, m in expand(rs, wm))
    assert s_matrix_closed(rs, wm) == RationalMatrix([[6, -3], [-3, 2]]).scale(F(x, 2))


def test_x_long_examples():
    for n in (2, 3, 4, 5):
        rs, wm = multiset(f"C{n}", (1,) + (0,) * (n - 1))
        assert x_long(rs, wm) == 2
    rs = rs_of("A2")
    assert x_long(rs, freudenthal(rs, (0, 0))) == 0
    # adjoint of sl3: six roots and a doubled zero weight
    rs, wm = multiset("A2", (1, 1))
    roots = [(2, -1), (-1, 2), (1, 1), (-2, 1), (1, -2), (-1, -1)]
    assert x_long(rs, wm) == sum(mu[0] ** 2 for mu in roots) == 12


def test_identity_report_examples():
    rs, wm = multiset("A3", (1, 0, 0))
    rep = identity_report(rs, wm)
    (pair,) = [c for c in rep.checks if (c.i, c.j) == (1, 3)]
    assert pair.kind == "disconnected" and pair.passed
    assert rep.s_bruteforce[0, 2] == 0

    for name in ("B2", "C2"):
        rs, wm = multiset(name, (1, 0))
        rep = identity_report(rs, wm)
        (pair,) = [c for c in rep.checks if c.kind == "connected-short-long"]
        assert pair.passed and rep.s_bruteforce[0, 1] == -rep.x

    rs, wm = multiset("G2", (1, 0))
    rep = identity_report(rs, wm)
    assert rep.passed
    assert rep.s_bruteforce[0, 0] == 3 * rep.s_bruteforce[1, 1]
    assert [c.kind for c in rep.checks] == ["diagonal-short", "diagonal-long", "g2"]


def test_identity_report_detects_non_invariant_weights(monkeypatch):
    import springer_torus.springer as sp
    rs, wm = multiset("G2", (1, 0))
    # drop -w1 from the 7-dim module: no longer W-invariant
    weights = [(mu, m) for mu, m in expand(rs, wm) if mu != (-1, 0)]
    monkeypatch.setattr(sp, "expand", lambda rs_, wm_: weights)
    rep = identity_report(rs, wm)
    assert not rep.passed
    assert [c.kind for c in rep.failures()] == ["diagonal-short", "g2"]


def test_x_long_rejects_mismatched_long_roots(monkeypatch):
    import springer_torus.springer as sp
    rs = rs_of("A2")
    wm = freudenthal(rs, (1, 0))
    monkeypatch.setattr(sp, "expand", lambda rs_, wm_: [((1, 0), 1)])
    with pytest.raises(sp.IdentityViolation):
        x_long(rs, wm)


@pytest.mark.parametrize("name,lam", grid_instances())
def test_main_identity_and_definiteness(name, lam):
    rs, wm = multiset(name, lam)
    rep = identity_report(rs, wm)
    assert rep.s_bruteforce == rep.s_closed
    assert rep.passed, rep.failures()
    assert rep.s_bruteforce.is_symmetric()
    assert is_positive_definite(rep.s_bruteforce)


def test_coefficients_examples():
    rs, wm = multiset("A1", (1,))
    assert coefficients(rs, wm) == [(e((1,)) - e((-1,))) * F(1, 2)]
    rs = rs_of("C2")
    with pytest.raises(NotAlmostFaithfulError):
        coefficients(rs, freudenthal(rs, (0, 0)))


@pytest.mark.parametrize("lam", [(1, 0), (0, 1), (2, 1)])
def test_g2_coefficient_formulas(lam):
    rs, wm = multiset("G2", lam)
    ex = expand(rs, wm)
    x = sum(m * mu[1] ** 2 for mu, m in ex)
    k = F(2, 3 * x)
    c1 = CharacterCombo([(mu, k * m * (2 * mu[0] + 3 * mu[1])) for mu, m in ex])
    c2 = CharacterCombo([(mu, k * m * (3 * mu[0] + 6 * mu[1])) for mu, m in ex])
    assert coefficients(rs, wm) == [c1, c2]


@pytest.mark.parametrize("name,lam", [("A3", (0, 1, 0)), ("B3", (1, 0, 1)), ("D4", (0, 1, 0, 0)),
                                      ("G2", (1, 1)), ("E6", (1, 0, 0, 0, 0, 0))])
def test_coefficients_back_substitute(name, lam):
    rs, wm = multiset(name, lam) if name != "E6" else (rs_of(name), freudenthal(rs_of(name), lam))
    cs = coefficients(rs, wm)
    assert s_matrix_closed(rs, wm).apply(cs) == moment_vector(rs, wm)
    one = TorusPoint.identity(rs.rank)
    assert all(abs(evaluate(c, one)) < 1e-12 for c in cs)


def test_springer_torus_examples():
    rs = rs_of("C2")
    res = springer_torus(rs, (1, 0), torus_from_symplectic_eigenvalues([2, 3]))
    assert res.coefficients[0] == pytest.approx(0.75, rel=1e-12)
    assert res.coefficients[1] == pytest.approx(1.5 / 2 + (3 - 1 / 3) / 2, rel=1e-12)
    assert res.coefficients[1] == pytest.approx(2.0833333333333, rel=1e-12)

    a1 = rs_of("A1")
    for w in (2.0, 0.5 + 1j, -3j):
        (c,) = springer_torus(a1, (1,), [w]).coefficients
        assert c == pytest.approx((w - 1 / w) / 2, rel=1e-12)

    for name in ("G2", "F4", "B3"):
        rs = rs_of(name)
        res = springer_torus(rs, rs.rho, TorusPoint.identity(rs.rank))
        assert all(abs(c) < 1e-12 for c in res.coefficients)


def test_springer_torus_with_cache(tmp_path):
    rs = rs_of("B2")
    z = TorusPoint((1.5, -0.5j))
    a = springer_torus(rs, (1, 1), z)
    b = springer_torus(rs, (1, 1), z, cache_dir=tmp_path)
    assert a.coefficients == b.coefficients


def test_torus_from_symplectic_eigenvalues():
    assert torus_from_symplectic_eigenvalues([1, 1, 1]).z == (1, 1, 1)
    assert torus_from_symplectic_eigenvalues([2, 3]).z == (2, 6)
    a, b, c = 2 + 1j, -0.5, 3j
    assert torus_from_symplectic_eigenvalues([a, b, c]).z == pytest.approx((a, a * b, a * b * c))
    with pytest.raises(ValueError):
        torus_from_symplectic_eigenvalues([1, 0])


def test_symplectic_diagonal_matches_coroot_matrices():
    """Build sum c_i alpha_i^vee as explicit 2n x 2n diagonal matrices."""
    n = 4
    c = [1.0, -2.0 + 1j, 0.5, 3.0]
    mat = np.zeros(2 * n, dtype=complex)
    for i in range(n - 1):
        mat[i] += c[i]
        mat[i + 1] -= c[i]
        mat[n + i] -= c[i]
        mat[n + i + 1] += c[i]
    mat[n - 1] += c[n - 1]
    mat[2 * n - 1] -= c[n - 1]
    assert np.allclose(symplectic_diagonal(c), mat)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cayley_transform_diagonal(n):
    rs = rs_of(f"C{n}")
    rng = np.random.default_rng(n)
    t = rng.uniform(0.5, 2, n) * np.exp(1j * rng.uniform(0, 2 * np.pi, n))
    res = springer_torus(rs, rs.fundamental_weight(0), torus_from_symplectic_eigenvalues(t))
    diag = symplectic_diagonal(res.coefficients)
    expected = (t - 1 / t) / 2
    assert np.allclose(diag[:n], expected, rtol=1e-9, atol=0)
    assert np.allclose(diag[n:], -expected, rtol=1e-9, atol=0)
