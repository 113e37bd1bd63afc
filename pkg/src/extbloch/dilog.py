"""Principal logarithm, dilogarithm, Rogers dilogarithm and branched lifts.

Branch conventions, fixed once for the whole library:

* Arg z lies in (-pi, pi]; negative reals get +pi exactly.
* li2 has its cut on (1, oo).  Arguments on the cut need an explicit side
  flag (the upper/lower edge of the cut), mirroring the two copies of each
  real r > 1 on the cut-open plane.
* rogers(z) = -1/2 Log(z) Log(1/(1-z)) + li2(z) - pi^2/6, normalized so
  rogers(1/2) = -pi^2/12 and the real extension has rogers_real(1) = 0.
* lifted_rogers(z, p, q) adds the branch correction
  pi*i/2 * (q Log z - p Log(1/(1-z))) for even integers p, q.
"""

from __future__ import annotations

import cmath
import math
from enum import Enum
from fractions import Fraction

from .config import DEFAULT_TOL
from .errors import LogOfZero, OnCut

PI = math.pi
PI_SQ = PI * PI
TWO_PI_SQ = 2.0 * PI_SQ
PI2_6 = PI_SQ / 6.0


class CutSide(Enum):
    """Which edge of a real cut an argument sits on."""

    ABOVE = 1
    BELOW = -1


def plog(z: complex, tol_zero: float = DEFAULT_TOL.zero) -> complex:
    """Principal logarithm, ln|z| + i Arg z with Arg in (-pi, pi].

    Negative reals (including ones carrying a negative-zero imaginary part)
    get +i*pi exactly.
    """
    z = complex(z)
    if abs(z) <= tol_zero:
        raise LogOfZero(f"log of {z}")
    if z.imag == 0.0:
        z = complex(z.real, 0.0)  # normalize -0.0 onto the principal side
    return cmath.log(z)


def plog_sided(x: float, side: CutSide) -> complex:
    """Logarithm of a negative real approached from above or below the axis."""
    if x >= 0:
        return plog(complex(x, 0.0))
    return complex(math.log(-x), side.value * PI)


def _bernoulli_coeffs(count: int) -> list[float]:
    """B_k / (k+1)! for k = 0..count-1, B_1 = -1/2 convention."""
    bern = [Fraction(1)]
    for m in range(1, count):
        acc = Fraction(0)
        binom = 1
        for j in range(m):
            acc += binom * bern[j]
            binom = binom * (m + 1 - j) // (j + 1)
        bern.append(-acc / (m + 1))
    coeffs = []
    fact = 1
    for k in range(count):
        fact *= k + 1  # (k+1)!
        coeffs.append(float(bern[k] / fact))
    return coeffs


_BERN_COEFFS = _bernoulli_coeffs(90)


def _li2_series(z: complex) -> complex:
    """Power series sum z^k / k^2, for |z| <= 1/2."""
    term = z
    acc = z
    k = 1
    while abs(term) > 1e-18 * (1.0 + abs(acc)):
        k += 1
        term *= z
        acc += term / (k * k)
        if k > 200:  # unreachable for |z| <= 1/2
            break
    return acc


def _li2_log_series(u: complex) -> complex:
    """Expansion of li2 in u = -Log(1-z), valid for |Im u| < pi."""
    acc = 0j
    upow = u
    for c in _BERN_COEFFS:
        if c != 0.0:
            acc += c * upow
        upow *= u
    return acc


def li2(z: complex, side: CutSide | None = None) -> complex:
    """Principal-branch dilogarithm -int_0^z Log(1-t)/t dt.

    The cut runs along (1, oo); real arguments there require a side flag
    and evaluate to the limit from the corresponding half plane.
    """
    z = complex(z)
    if z.imag == 0.0:
        x = z.real
        if x > 1.0:
            if side is None:
                raise OnCut(f"li2({x}) is on the cut; pass a side flag")
            lx = math.log(x)
            real = PI_SQ / 3.0 - 0.5 * lx * lx - li2(1.0 / x).real
            return complex(real, side.value * PI * lx)
        z = complex(x, 0.0)
    if z == 0.0:
        return 0j
    if z == 1.0:
        return complex(PI2_6, 0.0)
    r = abs(z)
    if r <= 0.5:
        return _li2_series(z)
    if r >= 2.0:
        # inversion into the |1/z| <= 1/2 disc
        lz = plog(-z)
        return -_li2_series(1.0 / z) - PI2_6 - 0.5 * lz * lz
    if abs(1.0 - z) <= 0.5:
        # reflection into the disc around 0
        return PI2_6 - plog(z) * plog(1.0 - z) - _li2_series(1.0 - z)
    return _li2_log_series(-plog(1.0 - z))


def rogers(z: complex) -> complex:
    """Rogers dilogarithm, normalized so the five-term sum vanishes.

    Defined off {0, 1}; real arguments outside (0, 1) sit on discontinuity
    cuts, use rogers_real (or the sided variant) there.
    """
    z = complex(z)
    return -0.5 * plog(z) * plog(1.0 / (1.0 - z)) + li2(z) - PI2_6


def rogers_sided(x: float, side: CutSide) -> complex:
    """Limit of rogers at a real argument outside [0, 1] from one side."""
    if 0.0 <= x <= 1.0:
        raise ValueError("sided evaluation is for arguments outside [0, 1]")
    if x < 0.0:
        # li2 is continuous here; only Log(x) is sided
        lz = plog_sided(x, side)
        return -0.5 * lz * plog(1.0 / (1.0 - x)) + li2(x) - PI2_6
    # x > 1: 1 - x is negative and approached from the opposite side
    other = CutSide.BELOW if side is CutSide.ABOVE else CutSide.ABOVE
    inv = -plog_sided(1.0 - x, other)  # Log(1/(1-x)) on the matching side
    return -0.5 * math.log(x) * inv + li2(x, side) - PI2_6


def rogers_real(x: float) -> float:
    """Discontinuous extension of rogers to the whole real line.

    rogers_real(1) = 0, rogers_real(0) = -pi^2/6, and the values outside
    [0, 1] are folded back by x -> 1/x and x -> x/(x-1).
    """
    if x == 1.0:
        return 0.0
    if x == 0.0:
        return -PI2_6
    if 0.0 < x < 1.0:
        return rogers(complex(x, 0.0)).real
    if x > 1.0:
        return -rogers_real(1.0 / x)
    return -rogers_real(x / (x - 1.0))


def vol(z: complex) -> float:
    """Oriented volume of the ideal simplex with cross-ratio z
    (the Bloch-Wigner function).  Real arguments give 0."""
    z = complex(z)
    if z.imag == 0.0:
        return 0.0
    return cmath.phase(1.0 - z) * math.log(abs(z)) + li2(z).imag


def lifted_rogers(z: complex, p: int, q: int) -> complex:
    """Rogers dilogarithm on the branched cover: the base value plus
    pi*i/2 * (q Log z - p Log(1/(1-z))).

    Two labels identified across a cut (the side convention being the upper
    half plane limit) give values differing by an element of 2 pi^2 Z.
    """
    base = rogers(z)
    if p == 0 and q == 0:
        return base
    corr = q * plog(z) - p * plog(1.0 / (1.0 - z))
    return base + 0.5j * PI * corr


def lifted_rogers_sided(x: float, p: int, q: int, side: CutSide) -> complex:
    """Lifted Rogers value at a real point on a cut, from a chosen side."""
    base = rogers_sided(x, side)
    if x < 0.0:
        log_z = plog_sided(x, side)
        log_inv = plog(1.0 / (1.0 - x))
    else:
        other = CutSide.BELOW if side is CutSide.ABOVE else CutSide.ABOVE
        log_z = complex(math.log(x), 0.0)
        log_inv = -plog_sided(1.0 - x, other)
    return base + 0.5j * PI * (q * log_z - p * log_inv)


def lhat(pt, side: CutSide | None = None) -> complex:
    """Lifted Rogers evaluation of a covering point (duck-typed: needs
    .z, .p, .q).  ``side`` selects the cut edge for real z outside [0, 1]."""
    z = complex(pt.z)
    if side is not None and z.imag == 0.0 and (z.real < 0.0 or z.real > 1.0):
        return lifted_rogers_sided(z.real, pt.p, pt.q, side)
    return lifted_rogers(z, pt.p, pt.q)
