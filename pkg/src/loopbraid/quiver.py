"""Dimension-vector bookkeeping for representations of G = C2 * S3.

A G-representation restricted to C2 and S3 gives multiplicities
``(a, b; x, y, z)`` of ``S+, S-`` and of the trivial, sign and
2-dimensional S3-irreducibles.  Semisimple points are written as
``S1^p + S2^q + S3^r + S4^s + S5^t`` in the five minimal stable types.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

import numpy as np

from .components import AlphaTuple
from .linalg import DEFAULT_TOL, Tolerance, as_matrix, frobenius_distance, frobenius_norm, identity
from .reps import NonIntegralMultiplicity, integral_multiplicity

THETA = (-1, -1, 1, 1, 2)


class NotAnS3Rep(ValueError):
    pass


class GQuiverDimVector(NamedTuple):
    a: int
    b: int
    x: int  # trivial
    y: int  # sign
    z: int  # 2-dimensional

    @property
    def n(self) -> int:
        return self.a + self.b

    def is_consistent(self) -> bool:
        return self.a + self.b == self.x + self.y + 2 * self.z

    def __str__(self) -> str:
        return f"({self.a},{self.b};{self.x},{self.y},{self.z})"


class GDimVector(NamedTuple):
    p: int
    q: int
    r: int
    s: int
    t: int

    @property
    def n(self) -> int:
        return self.p + self.q + self.r + self.s + 2 * self.t


def theta_weight(beta) -> int:
    return sum(w * k for w, k in zip(THETA, beta))


def minimal_theta_stable_vectors() -> list[GQuiverDimVector]:
    return [
        GQuiverDimVector(1, 0, 1, 0, 0),
        GQuiverDimVector(1, 0, 0, 1, 0),
        GQuiverDimVector(0, 1, 1, 0, 0),
        GQuiverDimVector(0, 1, 0, 1, 0),
        GQuiverDimVector(1, 1, 0, 0, 1),
    ]


def g_component_of(g: GDimVector) -> GQuiverDimVector:
    p, q, r, s, t = g
    return GQuiverDimVector(p + q + t, r + s + t, p + r, q + s, t)


EXCEPTIONAL = (GDimVector(1, 0, 0, 1, 0), GDimVector(0, 1, 1, 0, 0))


def is_simple_dimvector(g: GDimVector) -> bool:
    """Simplicity criterion for the local quiver, taken verbatim (zero vector excluded)."""
    p, q, r, s, t = g
    if not any(g):
        return False
    if tuple(g) in EXCEPTIONAL:
        return True
    return p <= s + t and q <= r + t and r <= q + t and s <= p + t


def restrict_to_gamma(g: GDimVector) -> AlphaTuple:
    # trivial and sign both restrict to the trivial C3-character, the
    # 2-dimensional irreducible to rho + rho^2
    p, q, r, s, t = g
    return AlphaTuple(p + q + t, r + s + t, p + q + r + s, t, t)


def gamma_condition_via_g(g: GDimVector) -> bool:
    p, q, r, s, t = g
    return t >= r + s and t >= p + q


def g_vectors(n: int):
    for t in range(n // 2 + 1):
        m = n - 2 * t
        for p, q, r in itertools.product(range(m + 1), repeat=3):
            if p + q + r <= m:
                yield GDimVector(p, q, r, m - p - q - r, t)


def enumerate_g_simple_components(n: int) -> list[GDimVector]:
    if n < 1:
        raise ValueError("n must be at least 1")
    return sorted(g for g in g_vectors(n) if is_simple_dimvector(g))


def excluded_singletons(n: int) -> list[GDimVector]:
    """The 1-dimensional types S1..S4 as unit vectors, which the verbatim
    criterion rejects although they are stable; empty for ``n != 1``."""
    if n != 1:
        return []
    units = [GDimVector(*(1 if k == i else 0 for k in range(5))) for i in range(4)]
    return [g for g in units if not is_simple_dimvector(g)]


def s3_restriction_multiplicities(s1, s2, tol: Tolerance = DEFAULT_TOL) -> tuple[int, int, int]:
    """Multiplicities of trivial, sign and 2-dimensional S3-irreducibles from traces."""
    s1, s2 = as_matrix(s1), as_matrix(s2)
    n = s1.shape[0]
    I = identity(n)
    scale = max(1.0, frobenius_norm(s1), frobenius_norm(s2)) ** 3
    bad = max(frobenius_distance(s1 @ s1, I), frobenius_distance(s2 @ s2, I),
              frobenius_distance(s1 @ s2 @ s1, s2 @ s1 @ s2))
    if bad > tol.residual_eps * scale:
        raise NotAnS3Rep(f"S3 relations violated (residual {bad:.3g})")
    tr1 = np.trace(s1)
    tr3 = np.trace(s1 @ s2)
    return (
        integral_multiplicity((n + 3 * tr1 + 2 * tr3) / 6, "trivial"),
        integral_multiplicity((n - 3 * tr1 + 2 * tr3) / 6, "sign"),
        integral_multiplicity((2 * n - 2 * tr3) / 6, "2-dimensional"),
    )


__all__ = [
    "THETA", "GQuiverDimVector", "GDimVector", "NotAnS3Rep", "NonIntegralMultiplicity",
    "theta_weight", "minimal_theta_stable_vectors", "g_component_of", "is_simple_dimvector",
    "restrict_to_gamma", "gamma_condition_via_g", "g_vectors", "enumerate_g_simple_components",
    "excluded_singletons", "s3_restriction_multiplicities",
]
