"""Independent oracles used to freeze expected values.

These deliberately avoid the library's own code paths: the dilogarithm is
integrated by composite Simpson from its defining integral, and the wedge
identity is expanded over opaque symbols with a dict, not the library's
wedge type.
"""

from __future__ import annotations

import cmath


def li2_simpson(z: complex, panels: int | None = None) -> complex:
    """-int_0^1 Log(1 - t z)/t dt by composite Simpson on [0, 1].

    The integrand is smooth there for z off [1, oo); the removable
    singularity at t = 0 has limit z.  The panel count adapts to the
    distance from the endpoint singularity at z = 1.
    """
    z = complex(z)
    if z == 0:
        return 0j
    if panels is None:
        d = abs(1.0 - z)
        panels = max(4096, min(int(4000.0 / max(d, 1e-3)), 400000))
    if panels % 2:
        panels += 1
    h = 1.0 / panels

    def f(t: float) -> complex:
        if t == 0.0:
            return z
        return -cmath.log(1.0 - t * z) / t

    acc = f(0.0) + f(1.0)
    for k in range(1, panels):
        acc += f(k * h) * (4 if k % 2 else 2)
    return acc * h / 3.0


def vol_simpson(z: complex) -> float:
    """Oriented simplex volume from its integral form:
    Arg(1-z) ln|z| + Im(li2(z)), with li2 from the quadrature oracle."""
    return cmath.phase(1.0 - z) * cmath.log(abs(z)).real + li2_simpson(z).imag


# ---------------------------------------------------------------------------
# symbolic wedge expansion over index pairs (independent of WedgeElement)


def _wedge_insert(acc: dict, coeff: int, a, b):
    if a == b:
        return
    if a > b:
        a, b = b, a
        coeff = -coeff
    acc[(a, b)] = acc.get((a, b), 0) + coeff
    if acc[(a, b)] == 0:
        del acc[(a, b)]


def nu_sigma_symbolic(indices=(0, 1, 2, 3)) -> dict:
    """w0 ^ w1 of the log-determinant flattening, expanded over symbols
    (i, j) = 'log det(v_i, v_j)'."""
    i0, i1, i2, i3 = indices
    w0 = [(1, (i0, i3)), (1, (i1, i2)), (-1, (i0, i2)), (-1, (i1, i3))]
    w1 = [(1, (i0, i2)), (1, (i1, i3)), (-1, (i0, i1)), (-1, (i2, i3))]
    acc: dict = {}
    for ca, a in w0:
        for cb, b in w1:
            _wedge_insert(acc, ca * cb, a, b)
    return acc


def mu_symbolic(indices) -> dict:
    """(01)^(02) - (01)^(12) + (02)^(12) over symbolic index pairs."""
    i0, i1, i2 = indices
    acc: dict = {}
    _wedge_insert(acc, +1, (i0, i1), (i0, i2))
    _wedge_insert(acc, -1, (i0, i1), (i1, i2))
    _wedge_insert(acc, +1, (i0, i2), (i1, i2))
    return acc


def mu_boundary_symbolic() -> dict:
    """sum_i (-1)^i mu(face_i) over the faces of (v0, v1, v2, v3)."""
    acc: dict = {}
    for i in range(4):
        face = tuple(j for j in range(4) if j != i)
        for (a, b), c in mu_symbolic(face).items():
            _wedge_insert(acc, (-1) ** i * c, a, b)
    return acc


def dict_difference(d1: dict, d2: dict) -> dict:
    out = dict(d1)
    for k, v in d2.items():
        out[k] = out.get(k, 0) - v
        if out[k] == 0:
            del out[k]
    return out
