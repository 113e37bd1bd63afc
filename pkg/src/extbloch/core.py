"""SL(2,C) matrices, projective vectors, the Hopf map and cross-ratios.

Everything downstream consumes these: group elements act on the sphere by
Moebius transformations and on C^2 \\ {0} linearly, the two actions being
intertwined by the Hopf map (z, w) -> z/w.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import DEFAULT_TOL, Tolerances
from .errors import DegenerateTuple, DeterminantError


class _Infinity:
    """The point at infinity on the Riemann sphere (singleton INF)."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INF"


INF = _Infinity()

# A point of C u {inf}: either a finite complex value or the INF singleton.
ExtComplex = "complex | _Infinity"


def is_inf(z) -> bool:
    return isinstance(z, _Infinity)


def ext_close(z, w, tol: float = DEFAULT_TOL.cmp) -> bool:
    """Equality on C u {inf} within an absolute tolerance."""
    if is_inf(z) or is_inf(w):
        return is_inf(z) and is_inf(w)
    return abs(z - w) <= tol


@dataclass(frozen=True)
class GroupElement:
    """A 2x2 complex matrix (a b; c d) with determinant 1.

    Construction fails loudly when |det - 1| exceeds the tolerance; silent
    renormalization would mask caller bugs.
    """

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if abs(det - 1.0) > DEFAULT_TOL.det:
            raise DeterminantError(f"determinant {det} differs from 1")

    @classmethod
    def identity(cls) -> "GroupElement":
        return cls(1.0, 0.0, 0.0, 1.0)

    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "GroupElement":
        return GroupElement(self.d, -self.b, -self.c, self.a)

    def __neg__(self) -> "GroupElement":
        return GroupElement(-self.a, -self.b, -self.c, -self.d)

    def conjugate_entries(self) -> "GroupElement":
        """Entrywise complex conjugate (again in SL(2,C))."""
        return GroupElement(
            self.a.conjugate(), self.b.conjugate(),
            self.c.conjugate(), self.d.conjugate(),
        )

    def apply(self, v: "ProjVector") -> "ProjVector":
        return ProjVector(self.a * v.v1 + self.b * v.v2,
                          self.c * v.v1 + self.d * v.v2)

    def close_to(self, other: "GroupElement", tol: float = DEFAULT_TOL.cmp) -> bool:
        return max(abs(x - y) for x, y in zip(self.entries(), other.entries())) <= tol

    def sign_equiv(self, other: "GroupElement", tol: float = DEFAULT_TOL.cmp) -> bool:
        """True when g is elementwise close to +h or to -h."""
        return self.close_to(other, tol) or self.close_to(-other, tol)

    def max_abs(self) -> float:
        return max(abs(x) for x in self.entries())


@dataclass(frozen=True)
class ProjVector:
    """A nonzero vector in C^2."""

    v1: complex
    v2: complex

    def __post_init__(self):
        if max(abs(self.v1), abs(self.v2)) <= DEFAULT_TOL.zero:
            raise ValueError("projective vector must be nonzero")

    def entries(self) -> tuple[complex, complex]:
        return (self.v1, self.v2)

    def norm(self) -> float:
        return math.hypot(abs(self.v1), abs(self.v2))


def det_pair(v: ProjVector, w: ProjVector) -> complex:
    """Determinant of the 2x2 matrix with columns v, w."""
    return v.v1 * w.v2 - v.v2 * w.v1


def hopf(v: ProjVector, tol_zero: float = DEFAULT_TOL.zero):
    """Hopf map (v1, v2) -> v1/v2, sending (., 0) to infinity."""
    if abs(v.v2) <= tol_zero:
        return INF
    return v.v1 / v.v2


def moebius(g: GroupElement, z, tol_zero: float = DEFAULT_TOL.zero):
    """Moebius action of g on C u {inf}, poles handled by limits."""
    if is_inf(z):
        if abs(g.c) <= tol_zero:
            return INF
        return g.a / g.c
    den = g.c * z + g.d
    if abs(den) <= tol_zero * (1.0 + abs(z)):
        return INF
    return (g.a * z + g.b) / den


def cross_ratio(z0, z1, z2, z3, tol: Tolerances = DEFAULT_TOL) -> complex:
    """(z0-z3)(z1-z2) / ((z0-z2)(z1-z3)), with infinite entries resolved by
    cancelling the dominant factors rather than by large-number substitution.

    Raises DegenerateTuple when two of the points coincide within tol.cmp.
    """
    pts = (z0, z1, z2, z3)
    for i in range(4):
        for j in range(i + 1, 4):
            if ext_close(pts[i], pts[j], tol.cmp):
                raise DegenerateTuple(f"points {i} and {j} coincide")
    if is_inf(z0):
        return (z1 - z2) / (z1 - z3)
    if is_inf(z1):
        return (z0 - z3) / (z0 - z2)
    if is_inf(z2):
        return (z0 - z3) / (z1 - z3)
    if is_inf(z3):
        return (z1 - z2) / (z0 - z2)
    return ((z0 - z3) * (z1 - z2)) / ((z0 - z2) * (z1 - z3))


def cross_ratio_ext(z0, z1, z2, z3, tol: Tolerances = DEFAULT_TOL) -> complex:
    """As cross_ratio but returning 0 when any two points coincide."""
    try:
        return cross_ratio(z0, z1, z2, z3, tol)
    except DegenerateTuple:
        return 0j


def rotation(n: int, k: int) -> GroupElement:
    """Rotation matrix by angle 2*pi*k/n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    theta = 2.0 * math.pi * k / n
    c, s = math.cos(theta), math.sin(theta)
    return GroupElement(c, -s, s, c)


def random_sl2(rng, box: float = 1.0, min_det: float = 0.05) -> GroupElement:
    """Random element: entries uniform in a complex box, then the first
    column scaled to normalize the determinant.  Any continuous full-support
    distribution works here; callers only need genericity."""
    while True:
        a, b, c, d = (
            complex(rng.uniform(-box, box), rng.uniform(-box, box))
            for _ in range(4)
        )
        det = a * d - b * c
        if abs(det) >= min_det:
            return GroupElement(a / det, b, c / det, d)


def random_vector(rng, radius: float = 1.0, min_norm: float = 0.05) -> ProjVector:
    """Random vector with entries uniform in the complex bidisc."""
    while True:
        v1 = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        v2 = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        if math.hypot(abs(v1), abs(v2)) >= min_norm:
            return ProjVector(v1, v2)
