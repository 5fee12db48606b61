"""Explicit matrix representations of the modular group and of B3."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .components import AlphaTuple
from .irreducibility import is_irreducible
from .linalg import (
    DEFAULT_TOL,
    RHO,
    IllConditioned,
    LinalgError,
    Tolerance,
    as_matrix,
    frobenius_distance,
    frobenius_norm,
    identity,
    inverse,
    mat_power,
)

#: Minimal/maximal pivot ratio below which a random base change is redrawn.
PIVOT_GUARD = 1e-6
#: Frobenius condition bound per dimension for random base changes.
COND_PER_DIM = 30.0
#: Multiplicities read off traces must be within this of an integer.
INTEGRALITY_EPS = 1e-6


class RepError(ValueError):
    pass


class DegenerateAlpha(RepError):
    pass


class NotAnInvolution(RepError):
    pass


class NotOrderThree(RepError):
    pass


class NonIntegralMultiplicity(RepError):
    pass


class NotIrreducible(RepError):
    """Raised when bounded resampling never produced an irreducible witness."""


@dataclass(frozen=True, eq=False)
class GammaRep:
    S: np.ndarray
    T: np.ndarray
    alpha: AlphaTuple
    seed: int = 0
    lam: complex = 1.0 + 0.0j

    @property
    def n(self) -> int:
        return self.S.shape[0]


@dataclass(frozen=True, eq=False)
class B3Rep:
    sigma1: np.ndarray
    sigma2: np.ndarray
    lam: complex
    source: GammaRep = field(repr=False)


def integral_multiplicity(value: complex, what: str) -> int:
    k = round(value.real)
    if abs(value.imag) > INTEGRALITY_EPS or abs(value.real - k) > INTEGRALITY_EPS:
        raise NonIntegralMultiplicity(f"{what} multiplicity {value} is not an integer")
    return int(k)


def restriction_multiplicities_c2(S, tol: Tolerance = DEFAULT_TOL) -> tuple[int, int]:
    S = as_matrix(S)
    n = S.shape[0]
    if frobenius_distance(S @ S, identity(n)) > tol.residual_eps * max(1.0, frobenius_norm(S)) ** 2:
        raise NotAnInvolution("S^2 != I")
    a = integral_multiplicity(np.trace(identity(n) + S) / 2, "+1")
    return a, n - a


def c3_projectors(T) -> list[np.ndarray]:
    """Spectral projectors ``P_k = (I + rho^-k T + rho^-2k T^2) / 3`` for ``k = 0, 1, 2``."""
    T = as_matrix(T)
    I = identity(T.shape[0])
    T2 = T @ T
    return [(I + RHO ** (-k) * T + RHO ** (-2 * k) * T2) / 3 for k in range(3)]


def check_order_three(T, tol: Tolerance = DEFAULT_TOL) -> None:
    T = as_matrix(T)
    if T.shape[0] != T.shape[1]:
        raise NotOrderThree("T is not square")
    scale = max(1.0, frobenius_norm(T)) ** 3
    if frobenius_distance(mat_power(T, 3), identity(T.shape[0])) > tol.residual_eps * scale:
        raise NotOrderThree("T^3 != I")


def restriction_multiplicities_c3(T, tol: Tolerance = DEFAULT_TOL) -> tuple[int, int, int]:
    check_order_three(T, tol)
    x, y, z = (integral_multiplicity(np.trace(P), f"rho^{k}") for k, P in enumerate(c3_projectors(T)))
    return x, y, z


def random_base_change(n: int, rng: np.random.Generator, max_tries: int = 64):
    """Square matrix with i.i.d. entries uniform on the square |Re|, |Im| <= 1, with its inverse.

    Draws are rejected by the pivot guard and when the Frobenius condition
    number ``|C| |C^-1|`` exceeds ``COND_PER_DIM * n``.
    """
    for _ in range(max_tries):
        C = rng.uniform(-1.0, 1.0, (n, n)) + 1j * rng.uniform(-1.0, 1.0, (n, n))
        try:
            Cinv = inverse(C, pivot_guard=PIVOT_GUARD)
        except IllConditioned:
            continue
        if frobenius_norm(C) * frobenius_norm(Cinv) <= COND_PER_DIM * n:
            return C, Cinv
    raise LinalgError("could not draw a well-conditioned base change")


def diagonal_gamma_rep(alpha: AlphaTuple, seed: int = 0) -> GammaRep:
    """Block-diagonal representative (base change = identity); reducible for n > 1."""
    alpha = AlphaTuple(*alpha).validate()
    S = np.diag([1.0] * alpha.a + [-1.0] * alpha.b).astype(np.complex128)
    T = np.diag([1.0] * alpha.x + [RHO] * alpha.y + [RHO ** 2] * alpha.z).astype(np.complex128)
    return GammaRep(S, T, alpha, seed)


def build_gamma_rep(alpha: AlphaTuple, seed: int = 0, *, require_irreducible: bool = True,
                    retries: int = 16, lam: complex = 1.0) -> GammaRep:
    """Seeded witness in the component labelled ``alpha``.

    ``S`` is exactly diagonal; ``T = C D C^-1`` with ``D`` the exact diagonal
    of cube roots of unity and ``C`` a seeded random base change.  With
    ``require_irreducible`` the base change is redrawn (up to ``retries``
    times) until the Burnside test passes.
    """
    alpha = AlphaTuple(*alpha).validate()
    if alpha.n == 0:
        raise DegenerateAlpha("dimension zero")
    base = diagonal_gamma_rep(alpha, seed)
    rng = np.random.default_rng(seed)
    for _ in range(retries):
        C, Cinv = random_base_change(alpha.n, rng)
        rep = GammaRep(base.S, C @ base.T @ Cinv, alpha, seed, complex(lam))
        if not require_irreducible or is_irreducible(rep):
            return rep
    raise NotIrreducible(f"no irreducible witness for {alpha} after {retries} draws (seed {seed})")


def validate_gamma_rep(rep: GammaRep, tol: Tolerance = DEFAULT_TOL) -> None:
    got = AlphaTuple(*restriction_multiplicities_c2(rep.S, tol),
                     *restriction_multiplicities_c3(rep.T, tol))
    if got != tuple(rep.alpha):
        raise RepError(f"matrices have multiplicities {got}, declared {rep.alpha}")


def braid_images(rep: GammaRep, lam: complex | None = None, tol: Tolerance = DEFAULT_TOL) -> B3Rep:
    """``sigma1 = lam T^2 S`` and ``sigma2 = lam S T^2``.

    From ``t = s1 s2`` (bars dropped) and ``s = s1 s2 s1`` one gets
    ``s1 = t^-1 s`` and ``s2 = s t^-1``, with ``t^-1 = t^2``.
    """
    lam = rep.lam if lam is None else complex(lam)
    T2 = rep.T @ rep.T
    s1 = lam * (T2 @ rep.S)
    s2 = lam * (rep.S @ T2)
    scale = max(1.0, frobenius_norm(s1)) ** 3
    assert frobenius_distance(s1 @ s2 @ s1, s2 @ s1 @ s2) <= tol.residual_eps * scale
    assert frobenius_distance(s1 @ s2, lam ** 2 * rep.T) <= tol.residual_eps * scale
    return B3Rep(s1, s2, lam, rep)


def gamma_rep_from_braid(sigma1, sigma2, seed: int = 0, tol: Tolerance = DEFAULT_TOL) -> GammaRep:
    """Read ``(S, T) = (s1 s2 s1, s1 s2)`` off braid images that factor through the modular group.

    The images must satisfy ``(s1 s2)^3 = I``, i.e. the scalar has sixth power
    one; the multiplicities are recomputed from the matrices.
    """
    sigma1, sigma2 = as_matrix(sigma1), as_matrix(sigma2)
    T = sigma1 @ sigma2
    S = T @ sigma1
    alpha = AlphaTuple(*restriction_multiplicities_c2(S, tol), *restriction_multiplicities_c3(T, tol))
    return GammaRep(S, T, alpha, seed)
