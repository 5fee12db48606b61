"""Extending modular-group representations to the loop braid group LB3.

The symmetric group part is realised by an involution ``Q`` with
``Q T Q = T^-1``; then ``s1 = Q`` and ``s2 = Q T`` give ``s1 s2 = T``.
Such a ``Q`` exists exactly when the ``rho`` and ``rho^2`` eigenspaces of
``T`` have equal dimension.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    as_matrix,
    frobenius_distance,
    frobenius_norm,
    identity,
    inverse,
    pivot_columns,
)
from .reps import GammaRep, braid_images, c3_projectors, check_order_three


class ObstructionReason(enum.Enum):
    MULTIPLICITY_MISMATCH = "MultiplicityMismatch"


@dataclass(frozen=True)
class ObstructionCertificate:
    mults: tuple[int, int, int]
    reason: ObstructionReason = ObstructionReason.MULTIPLICITY_MISMATCH

    def __str__(self) -> str:
        x, y, z = self.mults
        return (f"{self.reason.value}: T has eigenvalue multiplicities (1: {x}, rho: {y}, "
                f"rho^2: {z}); T is not conjugate to its inverse")


class MultiplicityMismatch(ValueError):
    def __init__(self, certificate: ObstructionCertificate):
        super().__init__(str(certificate))
        self.certificate = certificate


class SplitOutOfRange(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class EigenData:
    projectors: tuple[np.ndarray, np.ndarray, np.ndarray]
    bases: tuple[np.ndarray, np.ndarray, np.ndarray]

    @property
    def mults(self) -> tuple[int, int, int]:
        return tuple(B.shape[1] for B in self.bases)


@dataclass(frozen=True, eq=False)
class LB3Rep:
    sigma1: np.ndarray
    sigma2: np.ndarray
    s1: np.ndarray
    s2: np.ndarray
    lam: complex
    source: GammaRep | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return self.sigma1.shape[0]


RELATION_NAMES = (
    "(1) sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2",
    "(2) s1 s2 s1 = s2 s1 s2",
    "(3) s1^2 = s2^2 = 1",
    "(4) s1 s2 sigma1 = sigma2 s1 s2",
    "(5) sigma1 sigma2 s1 = s2 sigma1 sigma2",
)


@dataclass(frozen=True)
class RelationReport:
    residuals: tuple[float, float, float, float, float]
    tol: float

    @property
    def passed(self) -> bool:
        return all(r <= self.tol for r in self.residuals)

    @property
    def max_residual(self) -> float:
        return max(self.residuals)

    def failures(self) -> list[str]:
        return [name for name, r in zip(RELATION_NAMES, self.residuals) if not r <= self.tol]

    def as_dict(self) -> dict:
        return {"residuals": dict(zip(RELATION_NAMES, self.residuals)),
                "tol": self.tol, "passed": self.passed}


def eigen_data_order3(T, tol: Tolerance = DEFAULT_TOL) -> EigenData:
    """Spectral projectors of an order-3 matrix and column bases of their images."""
    T = as_matrix(T)
    check_order_three(T, tol)
    projs = c3_projectors(T)
    ref = max(float(np.sqrt(np.sum(np.abs(P) ** 2, axis=1)).max()) for P in projs)
    # independent columns of each projector, then orthonormalised so that the
    # assembled involution is only as ill-conditioned as the eigenspace angles
    bases = tuple(np.linalg.qr(P[:, list(pivot_columns(P, tol, scale=ref))])[0] for P in projs)
    if sum(B.shape[1] for B in bases) != T.shape[0]:
        raise ValueError("eigenspace dimensions do not add up to n")
    return EigenData(tuple(projs), bases)


def build_involution_q(ed: EigenData, v1_split: int | None = None,
                       tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Involution fixing ``v1_split`` basis vectors of the 1-eigenspace, negating
    the rest of it, and swapping the chosen bases of the ``rho`` and ``rho^2``
    eigenspaces."""
    x, y, z = ed.mults
    if y != z:
        raise MultiplicityMismatch(ObstructionCertificate((x, y, z)))
    if v1_split is None:
        v1_split = x
    if not 0 <= v1_split <= x:
        raise SplitOutOfRange(f"v1_split must lie in [0, {x}], got {v1_split}")
    n = x + 2 * y
    local = np.zeros((n, n), dtype=np.complex128)
    local[:x, :x] = np.diag([1.0] * v1_split + [-1.0] * (x - v1_split))
    local[x:x + y, x + y:] = identity(y)
    local[x + y:, x:x + y] = identity(y)
    B = np.hstack(ed.bases)
    return B @ local @ inverse(B, tol)


def extend_to_g(rep: GammaRep, v1_split: int | None = None,
                tol: Tolerance = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Images ``(s1, s2)`` of the symmetric-group generators with ``s1 s2 = T``."""
    Q = build_involution_q(eigen_data_order3(rep.T, tol), v1_split, tol)
    s1, s2 = Q, Q @ rep.T
    I = identity(rep.n)
    scale = max(1.0, frobenius_norm(s2)) ** 3
    assert frobenius_distance(s1 @ s1, I) <= tol.residual_eps * scale
    assert frobenius_distance(s2 @ s2, I) <= tol.residual_eps * scale
    assert frobenius_distance(s1 @ s2 @ s1, s2 @ s1 @ s2) <= tol.residual_eps * scale
    assert frobenius_distance(s1 @ s2, rep.T) <= tol.residual_eps * scale
    return s1, s2


def assemble_lb3(rep: GammaRep, lam: complex | None = None, v1_split: int | None = None,
                 tol: Tolerance = DEFAULT_TOL) -> LB3Rep:
    b3 = braid_images(rep, lam, tol)
    s1, s2 = extend_to_g(rep, v1_split, tol)
    return LB3Rep(b3.sigma1, b3.sigma2, s1, s2, b3.lam, rep)


def relation_residuals(sigma1, sigma2, s1, s2) -> tuple[float, float, float, float, float]:
    a, b, p, q = (as_matrix(m) for m in (sigma1, sigma2, s1, s2))
    if len({m.shape for m in (a, b, p, q)}) != 1 or a.shape[0] != a.shape[1]:
        raise ValueError("all four matrices must be square of one size")
    I = identity(a.shape[0])
    return (
        frobenius_distance(a @ b @ a, b @ a @ b),
        frobenius_distance(p @ q @ p, q @ p @ q),
        max(frobenius_distance(p @ p, I), frobenius_distance(q @ q, I)),
        frobenius_distance(p @ q @ a, b @ p @ q),
        frobenius_distance(a @ b @ p, q @ a @ b),
    )


def verify_lb3_relations(rep: LB3Rep, tol: float = DEFAULT_TOL.residual_eps) -> RelationReport:
    return RelationReport(relation_residuals(rep.sigma1, rep.sigma2, rep.s1, rep.s2), tol)
