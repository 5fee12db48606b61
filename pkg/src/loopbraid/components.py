"""Component labels for representation varieties of the modular group and B3.

A label ``(a, b; x, y, z)`` records the multiplicities of the eigenvalues
``+1, -1`` of the image of ``s`` and ``1, rho, rho^2`` of the image of ``t``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple


class AlphaTuple(NamedTuple):
    a: int
    b: int
    x: int
    y: int
    z: int

    @property
    def n(self) -> int:
        return self.a + self.b

    @property
    def c3(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def validate(self) -> "AlphaTuple":
        if min(self) < 0:
            raise ValueError(f"negative multiplicity in {self}")
        if self.a + self.b != self.x + self.y + self.z:
            raise ValueError(f"a+b != x+y+z in {self}")
        return self

    @classmethod
    def parse(cls, text: str) -> "AlphaTuple":
        parts = text.replace(";", ",").split(",")
        if len(parts) != 5:
            raise ValueError(f"expected five comma-separated integers, got {text!r}")
        return cls(*(int(p) for p in parts)).validate()

    def __str__(self) -> str:
        return f"({self.a},{self.b};{self.x},{self.y},{self.z})"


class Density(enum.Enum):
    YES = "YES"
    NO = "NO"
    UNKNOWN_DEGENERATE = "UNKNOWN-degenerate"


class UVW(NamedTuple):
    u: int
    v: int
    w: int


class UVWAssignment(NamedTuple):
    uvw: UVW
    position_of_uplusv: int  # 0, 1, 2 for the x, y, z slot

    def gamma_alpha(self, alpha: AlphaTuple) -> AlphaTuple:
        """Orbit member of ``alpha`` of the shape ``(v+w, u+w; u+v, w, w)``."""
        u, v, w = self.uvw
        return AlphaTuple(alpha.a, alpha.b, u + v, w, w)


@dataclass(frozen=True)
class ComponentRecord:
    alpha: AlphaTuple
    n: int
    dim: int
    irreducible_dense: Density
    gamma_extends: UVW | None = None
    b3_extends: UVWAssignment | None = None
    # Orbit member with matching rho / rho^2 multiplicities, used to build
    # an explicit extension.  None when no member has y == z.
    witness_alpha: AlphaTuple | None = None
    # Set when no orbit member satisfies b >= x (normal form not attained).
    orbit_flag: bool = False


def alpha_tuples(n: int) -> Iterator[AlphaTuple]:
    """All labels of dimension ``n`` in lexicographic order."""
    for a in range(n, -1, -1):
        for x in range(n, -1, -1):
            for y in range(n - x, -1, -1):
                yield AlphaTuple(a, n - a, x, y, n - x - y)


def component_dimension(alpha: AlphaTuple) -> int:
    a, b, x, y, z = alpha
    n = a + b
    return 1 + n * n - (a * a + b * b + x * x + y * y + z * z)


def mu6_generator_action(alpha: AlphaTuple) -> AlphaTuple:
    """Relabelling induced by scaling braid images by ``exp(i pi / 3)``.

    The scalar cubes to -1 (swapping the two eigenspaces of ``s``) and
    squares to ``rho`` (so the ``rho^2``-eigenspace of ``t`` becomes the
    1-eigenspace).
    """
    a, b, x, y, z = alpha
    return AlphaTuple(b, a, z, x, y)


def mu6_orbit(alpha: AlphaTuple) -> list[AlphaTuple]:
    orbit = [alpha]
    nxt = mu6_generator_action(alpha)
    while nxt != alpha:
        orbit.append(nxt)
        nxt = mu6_generator_action(nxt)
    return orbit


def _is_degenerate_u0v0_family(alpha: AlphaTuple) -> bool:
    # (w,w;0,w,w) with w = 1 and its mu6-rotations: the only xyz = 0 labels
    # above dimension 1 carrying irreducibles (two idempotents generate
    # at most 2x2 simple quotients).
    return alpha.a == alpha.b == 1 and sorted(alpha.c3) == [0, 1, 1]


def irreducible_density(alpha: AlphaTuple) -> Density:
    a, b, x, y, z = alpha
    if alpha.n == 1:
        return Density.YES
    if x * y * z != 0:
        return Density.YES if max(x, y, z) <= min(a, b) else Density.NO
    if _is_degenerate_u0v0_family(alpha):
        return Density.YES
    return Density.UNKNOWN_DEGENERATE


def gamma_extends(alpha: AlphaTuple) -> UVW | None:
    """``(u, v, w)`` with ``alpha = (v+w, u+w; u+v, w, w)`` and ``w >= max(u, v)``."""
    a, b, x, y, z = alpha
    if y != z:
        return None
    w = y
    u, v = b - w, a - w
    if u < 0 or v < 0 or x != u + v or w < max(u, v):
        return None
    return UVW(u, v, w)


def b3_extends(alpha: AlphaTuple) -> UVWAssignment | None:
    """First slot (x, y, z order) that can carry ``u+v`` with the rest equal to ``w``."""
    c3 = alpha.c3
    for a, b in ((alpha.a, alpha.b), (alpha.b, alpha.a)):
        for pos in range(3):
            rest = [c3[k] for k in range(3) if k != pos]
            if rest[0] != rest[1]:
                continue
            w = rest[0]
            u, v = b - w, a - w
            if u < 0 or v < 0 or c3[pos] != u + v or w < max(u, v):
                continue
            return UVWAssignment(UVW(u, v, w), pos)
    return None


def _normal_key(alpha: AlphaTuple) -> bool:
    return alpha.a >= alpha.b and alpha.x == max(alpha.c3)


def b3_normal_form(alpha: AlphaTuple) -> tuple[AlphaTuple, bool]:
    """Canonical orbit representative and a flag for ``b < x``.

    Returns the lexicographically smallest orbit member with ``a >= b`` and
    ``x = max(x, y, z)``; every orbit has one because the orbit contains all
    cyclic rotations of ``(x, y, z)`` combined with both orders of ``(a, b)``.
    The flag is set when that member does not satisfy ``b >= x``.
    """
    candidates = [m for m in mu6_orbit(alpha) if _normal_key(m)]
    rep = min(candidates)
    return rep, rep.b < rep.x


def _witness_member(alpha: AlphaTuple) -> AlphaTuple | None:
    for m in sorted(mu6_orbit(alpha), reverse=True):
        if m.y == m.z:
            return m
    return None


def _record(alpha: AlphaTuple, *, b3: bool) -> ComponentRecord:
    density = irreducible_density(alpha)
    if b3:
        alpha, flag = b3_normal_form(alpha)
        assignment = b3_extends(alpha)
        witness = assignment.gamma_alpha(alpha) if assignment else _witness_member(alpha)
        return ComponentRecord(alpha, alpha.n, component_dimension(alpha), density,
                               gamma_extends=gamma_extends(alpha), b3_extends=assignment,
                               witness_alpha=witness, orbit_flag=flag)
    return ComponentRecord(alpha, alpha.n, component_dimension(alpha), density,
                           gamma_extends=gamma_extends(alpha),
                           witness_alpha=alpha if alpha.y == alpha.z else None)


def enumerate_gamma_components(n: int) -> list[ComponentRecord]:
    if n < 1:
        raise ValueError("n must be at least 1")
    return [_record(alpha, b3=False) for alpha in alpha_tuples(n)]


def enumerate_b3_components(n: int) -> list[ComponentRecord]:
    """One record per mu6-orbit of irreducible-dense labels, sorted by normal form."""
    if n < 1:
        raise ValueError("n must be at least 1")
    reps = {b3_normal_form(alpha)[0] for alpha in alpha_tuples(n)
            if irreducible_density(alpha) is Density.YES}
    return [_record(alpha, b3=True) for alpha in sorted(reps, reverse=True)]


def brute_force_gamma_extends(alpha: AlphaTuple) -> UVW | None:
    """Exhaustive search over ``0 <= u, v, w <= n``; test oracle for :func:`gamma_extends`."""
    n = alpha.n
    for u, v, w in itertools.product(range(n + 1), repeat=3):
        if w >= max(u, v) and alpha == (v + w, u + w, u + v, w, w):
            return UVW(u, v, w)
    return None
