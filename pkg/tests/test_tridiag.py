import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lamespec import (
    LAME_EXPONENTS,
    Cubic,
    ExponentTriple,
    TridiagSpec,
    build_tridiag,
    check_psi_positivity,
    eigenvalues,
    limit_coeffs,
    linear_coefficient,
    null_vector,
    sp_eval,
    van_vleck_roots,
)
from lamespec.errors import DegreeTooSmall, IndexOutOfRange, NonPositivePsi, NotAnEigenvalue
from lamespec.tridiag import sturm_count

SYM = Cubic(1, 0, -1)
positive = st.floats(0.05, 5)


def lame_spec(c, m, a=LAME_EXPONENTS):
    return build_tridiag(c, linear_coefficient(c, a), m)


def test_m1_entries():
    t = lame_spec(SYM, 1)
    assert t.theta == 1.5
    assert np.allclose(t.xi, [0, 0])
    assert np.allclose(t.off_a, [-1])
    assert np.allclose(t.off_g, [-1 / 3])
    assert np.allclose(t.psi, [1 / 3])


def test_theta():
    assert lame_spec(SYM, 3).theta == 10.5


def test_degree_too_small():
    with pytest.raises(DegreeTooSmall):
        lame_spec(SYM, 0)


def test_m1_eigenvalues():
    ev = eigenvalues(lame_spec(SYM, 1))
    assert np.allclose(ev, [-1 / math.sqrt(3), 1 / math.sqrt(3)], rtol=0, atol=1e-15)


def test_two_by_two_closed_form():
    t = TridiagSpec.from_recurrence([0.0, 1.0], [0.25])
    expected = [(1 - math.sqrt(2)) / 2, (1 + math.sqrt(2)) / 2]
    assert np.allclose(eigenvalues(t), expected, rtol=0, atol=1e-15)


def test_psi_positivity_checks():
    assert check_psi_positivity(TridiagSpec.from_recurrence([0, 0], [1 / 3]))
    bad = TridiagSpec.from_recurrence([0, 0, 0], [1.0, -1.0])
    assert not check_psi_positivity(bad)
    with pytest.raises(NonPositivePsi):
        eigenvalues(bad)


@pytest.mark.parametrize("m", [1, 2, 5, 17, 50])
def test_positivity_lame(cubic, m):
    t = lame_spec(cubic, m)
    assert np.all(t.off_a < 0) and np.all(t.off_g < 0) and check_psi_positivity(t)


@settings(max_examples=40, deadline=None)
@given(st.tuples(positive, positive, positive), st.integers(1, 60),
       st.sampled_from([(1, 0, -1), (2, 0, -1), (5, 1, -3), (0.3, 0.1, -7)]))
def test_spectrum_properties(a, m, roots):
    c = Cubic(*roots)
    t = lame_spec(c, m, ExponentTriple(*a))
    assert check_psi_positivity(t)
    ev = eigenvalues(t)
    assert ev.size == m + 1
    assert np.all(np.diff(ev) > 0)
    # Stieltjes: all roots inside (e3, e1)
    assert np.all(ev > c.x3) and np.all(ev < c.x1)
    lapack = eigenvalues(t, "lapack")
    assert np.max(np.abs(ev - lapack)) <= 1e-11 * max(1.0, np.max(np.abs(ev)))


def test_bisection_accuracy_against_dense():
    t = lame_spec(Cubic(5, 1, -3), 80)
    d = np.sqrt(t.psi)
    dense = np.diag(t.xi) + np.diag(d, 1) + np.diag(d, -1)
    ref = np.linalg.eigvalsh(dense)
    lo, hi = t.gershgorin()
    assert np.max(np.abs(eigenvalues(t) - ref)) <= 1e-13 * max(abs(lo), abs(hi))


def test_interlacing(cubic):
    t = lame_spec(cubic, 30)
    for k in range(2, t.size):
        small = TridiagSpec.from_recurrence(t.xi[:k - 1], t.psi[:k - 2])
        big = TridiagSpec.from_recurrence(t.xi[:k], t.psi[:k - 1])
        a, b = eigenvalues(small), eigenvalues(big)
        # eigenvectors localized away from the last row move by less than rounding
        tol = 1e-14 * max(1.0, np.max(np.abs(b)))
        assert np.all(b[:-1] <= a + tol) and np.all(a <= b[1:] + tol)


def test_sturm_count():
    t = lame_spec(SYM, 10)
    ev = eigenvalues(t)
    mids = np.concatenate(([ev[0] - 1], 0.5 * (ev[1:] + ev[:-1]), [ev[-1] + 1]))
    assert list(sturm_count(t, mids)) == list(range(ev.size + 1))


def test_sp_eval_basics():
    t = lame_spec(SYM, 1)
    assert sp_eval(t, 0, 0.3) == 1.0
    assert sp_eval(t, 1, 0.3) == pytest.approx(0.3 - t.xi[0])
    assert abs(sp_eval(t, 2, 1 / math.sqrt(3))) <= 1e-15
    with pytest.raises(IndexOutOfRange):
        sp_eval(t, 3, 0.0)
    with pytest.raises(IndexOutOfRange):
        sp_eval(t, -1, 0.0)


def test_sp_eval_matches_determinant():
    t = lame_spec(Cubic(2, 0, -1), 6)
    x = 0.123
    m = np.diag(x - t.xi) + np.diag(t.off_a, 1) + np.diag(t.off_g, -1)
    assert sp_eval(t, t.size, x) == pytest.approx(np.linalg.det(m), rel=1e-12)


def test_sp_eval_large_degree():
    # |Sp| is near the top of the double range; compare with the product
    # over the eigenvalues
    t = lame_spec(Cubic(8, 0, -8), 800)
    ev = eigenvalues(t)
    x = 0.5 * (ev[400] + ev[401])
    v = sp_eval(t, t.size, x)
    assert np.isfinite(v) and abs(v) > 1e200
    assert math.log(abs(v)) == pytest.approx(np.sum(np.log(np.abs(x - ev))), rel=1e-12)
    assert np.sign(v) == np.prod(np.sign(x - ev))


def test_det_consistency(cubic):
    t = lame_spec(cubic, 40)
    ev = eigenvalues(t)
    grid = np.linspace(cubic.x3, cubic.x1, 301)
    scale = np.max(np.abs(sp_eval(t, t.size, grid)))
    assert np.max(np.abs(sp_eval(t, t.size, ev))) <= 1e-9 * scale


def test_null_vector_m1():
    t = lame_spec(SYM, 1)
    s = 1 / math.sqrt(3)
    a = null_vector(t, s).coeffs
    # S~ = z - r with r = -t: a1 / a0 = +1/sqrt(3)
    assert a[1] / a[0] == pytest.approx(s, rel=1e-14)
    b = null_vector(t, -s).coeffs
    assert b[1] / b[0] == pytest.approx(-s, rel=1e-14)
    with pytest.raises(NotAnEigenvalue):
        null_vector(t, s + 0.1)


@pytest.mark.parametrize("m", [3, 12, 40])
def test_null_vector_residual(cubic, m):
    t = lame_spec(cubic, m)
    for eig in eigenvalues(t):
        a = null_vector(t, eig).coeffs
        assert np.max(np.abs(a)) == 1.0
        scale = np.max(np.abs(eig - t.xi) + np.r_[np.abs(t.off_a), 0] + np.r_[0, np.abs(t.off_g)])
        assert np.max(np.abs(t.matvec(eig, a))) <= 1e-9 * scale


def test_null_vector_solves_ode():
    c = Cubic(2, 0, -1)
    p = linear_coefficient(c, LAME_EXPONENTS)
    t = build_tridiag(c, p, 5)
    eig = eigenvalues(t)[2]
    s = null_vector(t, eig).polynomial()
    z = np.linspace(-0.9, 1.9, 9)
    lhs = (z - c.x1) * z * (z - c.x3) * s.deriv(2)(z) + p(z) * s.deriv(1)(z) \
        - t.theta * (z - eig) * s(z)
    assert np.max(np.abs(lhs)) <= 1e-9 * np.max(np.abs(t.theta * s(z)))


def test_van_vleck_roots_frame():
    c = Cubic(3, 1, -1)
    shifted = Cubic(2, 0, -2)
    assert np.allclose(van_vleck_roots(c, LAME_EXPONENTS, 7),
                       van_vleck_roots(shifted, LAME_EXPONENTS, 7) + 1, atol=1e-14)


@pytest.mark.parametrize("tau", [0.25, 0.5, 0.75])
def test_limit_coefficient_convergence(cubic, tau):
    lx, lp = limit_coeffs(tau, cubic)
    dev = []
    for m in (100, 200, 400):
        t = lame_spec(cubic, m, ExponentTriple(0.3, 1.7, 0.9))
        i = math.ceil(tau * (m + 1))
        dev.append((abs(t.xi[i - 1] - lx), abs(t.psi[i - 2] - lp)))
    for j in (0, 1):
        assert dev[2][j] <= dev[1][j] <= dev[0][j]
