import numpy as np
import pytest

from loopbraid.components import AlphaTuple, enumerate_b3_components
from loopbraid.extend import (
    LB3Rep,
    MultiplicityMismatch,
    ObstructionReason,
    SplitOutOfRange,
    assemble_lb3,
    build_involution_q,
    eigen_data_order3,
    extend_to_g,
    verify_lb3_relations,
)
from loopbraid.irreducibility import burnside_dimension, is_irreducible
from loopbraid.linalg import RHO, frobenius_distance, identity
from loopbraid.quiver import s3_restriction_multiplicities
from loopbraid.reps import build_gamma_rep, diagonal_gamma_rep

A = AlphaTuple
SWAP = np.array([[0, 1], [1, 0]])


def test_eigen_data_examples():
    ed = eigen_data_order3(np.diag([1, RHO]))
    P0, P1, P2 = ed.projectors
    np.testing.assert_allclose(P0, np.diag([1, 0]), atol=1e-15)
    np.testing.assert_allclose(P1, np.diag([0, 1]), atol=1e-15)
    np.testing.assert_allclose(P2, np.zeros((2, 2)), atol=1e-15)
    assert ed.mults == (1, 1, 0)
    ed = eigen_data_order3(np.eye(3))
    np.testing.assert_allclose(ed.projectors[0], np.eye(3))
    assert ed.mults == (3, 0, 0)
    rep = build_gamma_rep(A(3, 2, 1, 2, 2), seed=7)
    assert eigen_data_order3(rep.T).mults == (1, 2, 2)


def test_involution_examples():
    ed = eigen_data_order3(np.diag([RHO, RHO ** 2]))
    np.testing.assert_allclose(build_involution_q(ed), SWAP, atol=1e-15)
    np.testing.assert_allclose(build_involution_q(eigen_data_order3(np.eye(1))), [[1]])
    rep = build_gamma_rep(A(3, 3, 3, 2, 1), seed=0)
    with pytest.raises(MultiplicityMismatch) as info:
        build_involution_q(eigen_data_order3(rep.T))
    assert info.value.certificate.mults == (3, 2, 1)
    assert info.value.certificate.reason is ObstructionReason.MULTIPLICITY_MISMATCH


def test_split_out_of_range():
    ed = eigen_data_order3(build_gamma_rep(A(2, 1, 1, 1, 1), seed=0).T)
    with pytest.raises(SplitOutOfRange):
        build_involution_q(ed, v1_split=2)


def test_extend_examples():
    s1, s2 = extend_to_g(build_gamma_rep(A(1, 0, 1, 0, 0)))
    np.testing.assert_allclose(s1, [[1]])
    np.testing.assert_allclose(s2, [[1]], atol=1e-15)
    rep = diagonal_gamma_rep(A(1, 1, 0, 1, 1))
    s1, s2 = extend_to_g(rep)
    np.testing.assert_allclose(s1, SWAP, atol=1e-15)
    np.testing.assert_allclose(s2, SWAP @ np.diag([RHO, RHO ** 2]), atol=1e-15)
    np.testing.assert_allclose(s2 @ s2, np.eye(2), atol=1e-15)


@pytest.mark.parametrize("seed", range(5))
def test_s3_multiplicities_after_extension(seed):
    rep = build_gamma_rep(A(4, 3, 3, 2, 2), seed)
    for split in range(4):
        s1, s2 = extend_to_g(rep, split)
        # trivial count = split, sign = x - split, 2-dim = y = z
        assert s3_restriction_multiplicities(s1, s2) == (split, 3 - split, 2)


def test_assemble_examples():
    lb = assemble_lb3(build_gamma_rep(A(1, 0, 1, 0, 0)), 1.0)
    for M in (lb.sigma1, lb.sigma2, lb.s1, lb.s2):
        np.testing.assert_allclose(M, [[1]], atol=1e-15)
    lb = assemble_lb3(build_gamma_rep(A(2, 1, 1, 1, 1), seed=0), np.exp(1j * np.pi / 7))
    assert verify_lb3_relations(lb).max_residual < 1e-10


def test_two_eigenvalue_family_extends_but_is_reducible():
    rep = build_gamma_rep(A(2, 2, 0, 2, 2), seed=0, require_irreducible=False)
    lb = assemble_lb3(rep, 1.0)
    assert verify_lb3_relations(lb).passed
    assert not is_irreducible(rep)
    assert s3_restriction_multiplicities(lb.s1, lb.s2)[2] == 2


def test_verify_identity_and_tamper():
    I = identity(3)
    report = verify_lb3_relations(LB3Rep(I, I, I, I, 1.0))
    assert report.residuals == (0.0,) * 5 and report.passed
    lb = assemble_lb3(build_gamma_rep(A(3, 2, 1, 2, 2), seed=1), np.exp(0.3j))
    s1 = lb.s1.copy()
    s1[0, 0] = -s1[0, 0]
    bad = verify_lb3_relations(LB3Rep(lb.sigma1, lb.sigma2, s1, lb.s2, lb.lam))
    assert not bad.passed
    assert bad.residuals[2] > 1e-6 or bad.residuals[3] > 1e-6
    assert bad.failures()


def test_verify_dimension_mismatch():
    with pytest.raises(ValueError):
        verify_lb3_relations(LB3Rep(identity(2), identity(2), identity(3), identity(2), 1.0))


def extendable_alphas(max_n):
    for n in range(1, max_n + 1):
        for rec in enumerate_b3_components(n):
            if rec.witness_alpha is not None:
                yield rec.witness_alpha


@pytest.mark.parametrize("alpha", list(extendable_alphas(8)), ids=str)
def test_every_small_extendable_component(alpha):
    for seed in range(5):
        rep = build_gamma_rep(alpha, seed)
        lam = np.exp(2j * np.pi * np.random.default_rng(seed).random())
        lb = assemble_lb3(rep, lam)
        assert verify_lb3_relations(lb).passed
        gens = [lb.sigma1, lb.sigma2, lb.s1, lb.s2]
        assert burnside_dimension(gens) == alpha.n ** 2


def test_obstruction_for_every_seed():
    for seed in range(5):
        rep = build_gamma_rep(A(3, 3, 3, 2, 1), seed)
        with pytest.raises(MultiplicityMismatch):
            assemble_lb3(rep, 1.0)


@pytest.mark.parametrize("alpha", [A(1, 0, 1, 0, 0), A(2, 1, 1, 1, 1), A(3, 1, 2, 1, 1), A(4, 3, 3, 2, 2)], ids=str)
def test_split_does_not_affect_relations(alpha):
    rep = build_gamma_rep(alpha, 3, require_irreducible=False)
    for split in range(alpha.x + 1):
        assert verify_lb3_relations(assemble_lb3(rep, 1j, split)).passed


@pytest.mark.parametrize("seed", range(10))
def test_projector_identities(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 25))
    y = int(rng.integers(0, n // 2 + 1))
    a = int(rng.integers(0, n + 1))
    rep = build_gamma_rep(A(a, n - a, n - 2 * y, y, y), seed, require_irreducible=False)
    ed = eigen_data_order3(rep.T)
    P = ed.projectors
    I = identity(n)
    for j in range(3):
        assert frobenius_distance(P[j] @ P[j], P[j]) < 1e-10
        assert frobenius_distance(rep.T @ P[j], RHO ** j * P[j]) < 1e-10
        for k in range(3):
            if j != k:
                assert np.linalg.norm(P[j] @ P[k]) < 1e-10
    assert frobenius_distance(P[0] + P[1] + P[2], I) < 1e-10
    Q = build_involution_q(ed)
    assert frobenius_distance(Q @ Q, I) < 1e-9
    assert frobenius_distance(Q @ rep.T @ Q, rep.T @ rep.T) < 1e-9
