"""Numerical irreducibility via Burnside closure, with a Schur commutant check."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_TOL, Tolerance, as_matrix, identity, kernel_basis

#: A product is a new direction when its component orthogonal to the current
#: span keeps more than this fraction of its norm.
NEW_DIRECTION_EPS = 1e-8


@dataclass(frozen=True, eq=False)
class AlgebraSpan:
    basis: list[np.ndarray]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _project_out(Q: np.ndarray, k: int, v: np.ndarray) -> np.ndarray:
    # two passes of classical Gram-Schmidt against the first k rows of Q
    for _ in range(2):
        if k:
            v = v - Q[:k].T @ (Q[:k].conj() @ v)
    return v


def algebra_span(gens, tol: Tolerance = DEFAULT_TOL) -> AlgebraSpan:
    """Orthonormal basis of the unital algebra generated by ``gens``.

    Starting from the identity, every accepted basis element is multiplied on
    the left by each generator; the span is closed once the queue drains.
    """
    gens = [as_matrix(g) for g in gens]
    n = gens[0].shape[0] if gens else 0
    if any(g.shape != (n, n) for g in gens):
        raise ValueError("generators must be square of a common size")
    if n == 0:
        return AlgebraSpan([])
    Q = np.zeros((n * n, n * n), dtype=np.complex128)
    I = identity(n).ravel()
    Q[0] = I / np.linalg.norm(I)
    k = 1
    queue = [0]
    while queue and k < n * n:
        X = Q[queue.pop(0)].reshape(n, n)
        for g in gens:
            v = (g @ X).ravel()
            norm0 = np.linalg.norm(v)
            if norm0 == 0.0:
                continue
            r = _project_out(Q, k, v)
            nr = np.linalg.norm(r)
            if nr > NEW_DIRECTION_EPS * norm0:
                Q[k] = r / nr
                queue.append(k)
                k += 1
                if k == n * n:
                    break
    return AlgebraSpan([Q[i].reshape(n, n) for i in range(k)])


def burnside_dimension(gens, tol: Tolerance = DEFAULT_TOL) -> int:
    return algebra_span(gens, tol).dim


def is_irreducible(rep, tol: Tolerance = DEFAULT_TOL) -> bool:
    n = rep.S.shape[0]
    return burnside_dimension([rep.S, rep.T], tol) == n * n


def commutant_system(gens) -> np.ndarray:
    """Stacked linear system in the row-major entries of X for ``[X, g] = 0``."""
    gens = [as_matrix(g) for g in gens]
    n = gens[0].shape[0]
    I = identity(n)
    # row-major vec: vec(A X B) = (A kron B^T) vec(X)
    return np.vstack([np.kron(I, g.T) - np.kron(g, I) for g in gens])


def commutant_dimension(rep, tol: Tolerance = DEFAULT_TOL) -> int:
    return kernel_basis(commutant_system([rep.S, rep.T]), tol).shape[1]
