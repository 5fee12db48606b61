import numpy as np
import pytest

from conftest import random_conjugator
from loopbraid.components import AlphaTuple, mu6_generator_action
from loopbraid.linalg import RHO, Tolerance, frobenius_distance, identity, mat_power
from loopbraid.reps import (
    DegenerateAlpha,
    NonIntegralMultiplicity,
    NotAnInvolution,
    NotOrderThree,
    braid_images,
    build_gamma_rep,
    diagonal_gamma_rep,
    gamma_rep_from_braid,
    restriction_multiplicities_c2,
    restriction_multiplicities_c3,
)

A = AlphaTuple
ZETA6 = np.exp(1j * np.pi / 3)


def test_scalar_rep():
    rep = build_gamma_rep(A(1, 0, 1, 0, 0), seed=5)
    np.testing.assert_allclose(rep.S, [[1]])
    np.testing.assert_allclose(rep.T, [[1]], atol=1e-15)


def test_degenerate_alpha():
    with pytest.raises(DegenerateAlpha):
        build_gamma_rep(A(0, 0, 0, 0, 0))


def test_trace_of_two_dim_rep():
    rep = build_gamma_rep(A(1, 1, 0, 1, 1), seed=11)
    assert np.trace(rep.T) == pytest.approx(-1, abs=1e-12)


def test_c2_multiplicities(rng):
    assert restriction_multiplicities_c2(np.diag([1, -1])) == (1, 1)
    assert restriction_multiplicities_c2(np.eye(3)) == (3, 0)
    C = random_conjugator(rng, 3)
    S = C @ np.diag([1, 1, -1]) @ np.linalg.inv(C)
    assert restriction_multiplicities_c2(S) == (2, 1)
    with pytest.raises(NotAnInvolution):
        restriction_multiplicities_c2(np.diag([1, 2]))


def test_c3_multiplicities(rng):
    assert restriction_multiplicities_c3(np.diag([1, RHO, RHO ** 2])) == (1, 1, 1)
    assert restriction_multiplicities_c3(np.eye(2)) == (2, 0, 0)
    C = random_conjugator(rng, 6)
    T = C @ np.diag([1, 1, 1, RHO, RHO ** 2, RHO ** 2]) @ np.linalg.inv(C)
    assert restriction_multiplicities_c3(T) == (3, 1, 2)
    with pytest.raises(NotOrderThree):
        restriction_multiplicities_c3(np.diag([1, 1j]))


def test_non_integral_multiplicity():
    # passes the order test at a loose tolerance but has a fractional trace
    T = np.diag([1.0, RHO * (1 + 1e-4)])
    with pytest.raises(NonIntegralMultiplicity):
        restriction_multiplicities_c3(T, Tolerance(residual_eps=1e-2))


ALPHAS = [A(2, 1, 1, 1, 1), A(3, 3, 3, 2, 1), A(3, 3, 2, 2, 2), A(4, 2, 2, 2, 2), A(5, 4, 3, 3, 3)]


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("seed", range(4))
def test_build_recovers_alpha(alpha, seed):
    rep = build_gamma_rep(alpha, seed)
    n = alpha.n
    assert frobenius_distance(rep.S @ rep.S, identity(n)) <= 1e-9
    assert frobenius_distance(mat_power(rep.T, 3), identity(n)) <= 1e-9
    got = (*restriction_multiplicities_c2(rep.S), *restriction_multiplicities_c3(rep.T))
    assert got == tuple(alpha)


def test_multiplicities_conjugation_invariant(rng):
    rep = build_gamma_rep(A(4, 3, 3, 2, 2), seed=2)
    C = random_conjugator(rng, 7)
    Ci = np.linalg.inv(C)
    S, T = C @ rep.S @ Ci, C @ rep.T @ Ci
    assert (*restriction_multiplicities_c2(S), *restriction_multiplicities_c3(T)) == (4, 3, 3, 2, 2)


def test_same_seed_same_rep():
    r1 = build_gamma_rep(A(3, 2, 2, 2, 1), seed=9)
    r2 = build_gamma_rep(A(3, 2, 2, 2, 1), seed=9)
    np.testing.assert_array_equal(r1.T, r2.T)


def test_braid_images_examples():
    b = braid_images(build_gamma_rep(A(1, 0, 1, 0, 0)), 1.0)
    np.testing.assert_allclose(b.sigma1, [[1]], atol=1e-15)
    np.testing.assert_allclose(b.sigma2, [[1]], atol=1e-15)
    rep = diagonal_gamma_rep(A(1, 1, 0, 1, 1))
    b = braid_images(rep, 1.0)
    np.testing.assert_allclose(b.sigma1, np.diag([RHO ** 2, -RHO]), atol=1e-15)


@pytest.mark.parametrize("seed", range(6))
def test_braid_relation_and_centre(seed):
    rng = np.random.default_rng(seed)
    alpha = ALPHAS[seed % len(ALPHAS)]
    rep = build_gamma_rep(alpha, seed)
    lam = np.exp(2j * np.pi * rng.random())
    b = braid_images(rep, lam)
    s1, s2 = b.sigma1, b.sigma2
    assert frobenius_distance(s1 @ s2 @ s1, s2 @ s1 @ s2) <= 1e-10 * max(1, np.linalg.norm(s1)) ** 3
    assert frobenius_distance(mat_power(s1 @ s2, 3), lam ** 6 * identity(alpha.n)) <= 1e-10 * max(1, np.linalg.norm(rep.T)) ** 3


@pytest.mark.parametrize("seed", range(20))
def test_mu6_action_numeric_oracle(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 8))
    a = int(rng.integers(0, n + 1))
    x = int(rng.integers(0, n + 1))
    y = int(rng.integers(0, n - x + 1))
    alpha = A(a, n - a, x, y, n - x - y)
    rep = build_gamma_rep(alpha, seed, require_irreducible=False)
    b = braid_images(rep, ZETA6)
    scaled = gamma_rep_from_braid(b.sigma1, b.sigma2)
    assert scaled.alpha == mu6_generator_action(alpha)
    # the conjugate primitive root acts by the inverse permutation
    b = braid_images(rep, ZETA6.conjugate())
    back = gamma_rep_from_braid(b.sigma1, b.sigma2).alpha
    assert mu6_generator_action(back) == alpha
