"""Dense complex matrix substrate.

Matrices are plain ``numpy`` complex128 arrays.  Rank, kernel and inverse are
computed by Gauss-Jordan elimination with scaled partial pivoting, with the
zero-pivot decision made relative to the largest initial row norm.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: Fixed primitive cube root of unity exp(2 pi i / 3).
RHO: complex = complex(np.exp(2j * np.pi / 3))


class LinalgError(ValueError):
    pass


class DimensionMismatch(LinalgError):
    pass


class Singular(LinalgError):
    pass


class IllConditioned(Singular):
    """Raised when the pivot ratio guard of :func:`inverse` trips."""


@dataclass(frozen=True)
class Tolerance:
    rank_eps: float = 1e-9
    residual_eps: float = 1e-9

    def __post_init__(self):
        if not (self.rank_eps > 0 and self.residual_eps > 0):
            raise ValueError("tolerances must be strictly positive")


DEFAULT_TOL = Tolerance()


def as_matrix(A) -> np.ndarray:
    """Coerce to a finite 2-d complex array (copy-free when possible)."""
    M = np.asarray(A, dtype=np.complex128)
    if M.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise LinalgError("matrix contains NaN or infinite entries")
    return M


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


def matmul(A, B) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    return A @ B


def mat_power(A, k: int) -> np.ndarray:
    A = as_matrix(A)
    out = identity(A.shape[0])
    for _ in range(k):
        out = out @ A
    return out


def frobenius_distance(A, B) -> float:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape != B.shape:
        raise DimensionMismatch(f"shapes differ: {A.shape} vs {B.shape}")
    return float(np.sqrt(np.sum(np.abs(A - B) ** 2)))


def frobenius_norm(A) -> float:
    return float(np.sqrt(np.sum(np.abs(as_matrix(A)) ** 2)))


@dataclass(frozen=True)
class Reduction:
    """Outcome of a Gauss-Jordan sweep.

    ``R`` is the reduced row echelon form (pivot rows first, pivots scaled
    to 1), ``pivot_cols`` the pivot column indices in order and
    ``pivot_mags`` the magnitudes of the pivots before normalisation.
    """

    R: np.ndarray
    pivot_cols: tuple[int, ...]
    pivot_mags: tuple[float, ...]

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)


def row_reduce(A, tol: Tolerance = DEFAULT_TOL, *, extra=None,
               scale: float | None = None) -> tuple[Reduction, np.ndarray | None]:
    """Gauss-Jordan elimination of ``A``.

    Pivots at or below ``tol.rank_eps`` times the largest initial row norm are
    treated as zero; ``scale`` overrides that reference norm, which matters when
    ``A`` is numerically zero but belongs to a family of O(1) matrices.

    If ``extra`` is given, the same row operations are applied to it (used for
    inversion via the augmented system) and the transformed ``extra`` is
    returned alongside.
    """
    R = as_matrix(A).copy()
    m, ncols = R.shape
    E = None if extra is None else as_matrix(extra).copy()
    if m == 0 or ncols == 0:
        return Reduction(R, (), ()), E

    scales = np.sqrt(np.sum(np.abs(R) ** 2, axis=1))
    threshold = tol.rank_eps * (float(scales.max()) if scale is None else scale)
    if threshold == 0.0:
        return Reduction(R, (), ()), E
    scales = np.where(scales > 0, scales, 1.0)

    pivots: list[int] = []
    mags: list[float] = []
    row = 0
    for col in range(ncols):
        if row == m:
            break
        cand = np.abs(R[row:, col])
        live = cand > threshold
        if not live.any():
            R[row:, col] = 0.0
            continue
        i = row + int(np.argmax(np.where(live, cand / scales[row:], -1.0)))
        if i != row:
            R[[row, i]] = R[[i, row]]
            scales[[row, i]] = scales[[i, row]]
            if E is not None:
                E[[row, i]] = E[[i, row]]
        piv = R[row, col]
        mags.append(abs(piv))
        R[row] /= piv
        if E is not None:
            E[row] /= piv
        factors = R[:, col].copy()
        factors[row] = 0.0
        R -= np.outer(factors, R[row])
        R[:, col][np.arange(m) != row] = 0.0
        if E is not None:
            E -= np.outer(factors, E[row])
        pivots.append(col)
        row += 1
    return Reduction(R, tuple(pivots), tuple(mags)), E


def rank(A, tol: Tolerance = DEFAULT_TOL, *, scale: float | None = None) -> int:
    return row_reduce(A, tol, scale=scale)[0].rank


def pivot_columns(A, tol: Tolerance = DEFAULT_TOL, *, scale: float | None = None) -> tuple[int, ...]:
    """Indices of a maximal set of linearly independent columns of ``A``."""
    return row_reduce(A, tol, scale=scale)[0].pivot_cols


def kernel_basis(A, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Columns spanning the null space of ``A``, read off the reduced form.

    Column ``j`` has a 1 in the position of the ``j``-th free variable, so
    e.g. ``[[1, rho], [rho^2, 1]]`` yields exactly ``(-rho, 1)``.
    """
    A = as_matrix(A)
    red, _ = row_reduce(A, tol)
    ncols = A.shape[1]
    free = [j for j in range(ncols) if j not in set(red.pivot_cols)]
    K = np.zeros((ncols, len(free)), dtype=np.complex128)
    for k, f in enumerate(free):
        K[f, k] = 1.0
        for r, p in enumerate(red.pivot_cols):
            K[p, k] = -red.R[r, f]
    assert red.rank + K.shape[1] == ncols
    return K


def inverse(A, tol: Tolerance = DEFAULT_TOL, *, pivot_guard: float | None = None) -> np.ndarray:
    """Inverse of a square matrix.

    Raises :class:`Singular` when the numerical rank is deficient and
    :class:`IllConditioned` when ``pivot_guard`` is given and the smallest
    pivot falls below ``pivot_guard`` times the largest one.
    """
    A = as_matrix(A)
    n, m = A.shape
    if n != m:
        raise DimensionMismatch(f"inverse of non-square {A.shape} matrix")
    red, Ainv = row_reduce(A, tol, extra=identity(n))
    if red.rank < n:
        raise Singular(f"matrix has numerical rank {red.rank} < {n}")
    if pivot_guard is not None and n > 0:
        if min(red.pivot_mags) < pivot_guard * max(red.pivot_mags):
            raise IllConditioned("pivot ratio below guard")
    return Ainv
