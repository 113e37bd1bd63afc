"""The branched cover of C minus {0,1} and its formal algebra.

A covering point is a pair of logarithm branch choices attached to a
cross-ratio: (z; p, q) with p, q even integers.  Equivalently it is a triple
(w0, w1, w2) of log-parameters summing to zero, with w0 a logarithm of z and
w1 a logarithm of 1/(1-z); the two descriptions are exchanged by
``to_covering_point`` / ``from_covering_point``.

Formal integer combinations of covering points (``PreBlochElement``) and of
wedges of logarithms (``WedgeElement``) provide the targets of the maps
defined in :mod:`extbloch.pipeline`.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .config import DEFAULT_TOL, Tolerances
from .core import ProjVector, det_pair
from .dilog import PI, plog
from .errors import ChiAtZero, DegenerateConfig, DegenerateFT, InvalidFlattening, NotEven
from .quantize import FuzzyIndex

# ---------------------------------------------------------------------------
# covering points and flattening triples


@dataclass(frozen=True)
class CoveringPoint:
    """A point (z; p, q) of the cover: z off {0, 1}, p and q even."""

    z: complex
    p: int
    q: int

    def __post_init__(self):
        if abs(self.z) <= DEFAULT_TOL.zero or abs(self.z - 1.0) <= DEFAULT_TOL.zero:
            raise ValueError(f"z = {self.z} must avoid 0 and 1")
        if self.p % 2 or self.q % 2:
            raise ValueError(f"branch integers must be even, got ({self.p}, {self.q})")


# an atom ledger is, per log-parameter, a tuple of (integer coeff, log value)
Ledger = tuple[tuple[tuple[int, complex], ...], ...]


@dataclass(frozen=True)
class FlatteningTriple:
    """Log-parameters (w0, w1, w2) with w0 + w1 + w2 = 0.

    w0 is a logarithm of the cross-ratio z = e^{w0} and w1 a logarithm of
    1/(1-z); this is validated at construction.  ``ledger``, when present,
    expresses each w as an integer combination of log atoms and enables
    exact wedge cancellation downstream.
    """

    w0: complex
    w1: complex
    w2: complex
    ledger: Ledger | None = field(default=None, compare=False)

    def __post_init__(self):
        if abs(self.w0 + self.w1 + self.w2) > 1e-9 * (1 + abs(self.w0) + abs(self.w1)):
            raise InvalidFlattening("log-parameters must sum to zero")
        z = cmath.exp(self.w0)
        target = 1.0 / (1.0 - z)
        if abs(cmath.exp(self.w1) - target) > 1e-6 * abs(target):
            raise InvalidFlattening("w1 is not a logarithm of 1/(1 - e^{w0})")

    @classmethod
    def from_w01(cls, w0: complex, w1: complex,
                 ledger: Ledger | None = None) -> "FlatteningTriple":
        return cls(w0, w1, -w0 - w1, ledger)

    def values(self) -> tuple[complex, complex, complex]:
        return (self.w0, self.w1, self.w2)


def snap_real(z: complex, rel: float = 1e-12) -> complex:
    """Snap a numerically-real value onto the real axis.

    Real points on the cuts are read as their upper-half-plane limits
    throughout the library; exponentials of genuinely real log-parameters
    must not leak to the wrong side through fp noise in the branch shifts.
    """
    if z.imag != 0.0 and abs(z.imag) <= rel * (1.0 + abs(z.real)):
        return complex(z.real, 0.0)
    return z


def to_covering_point(t: FlatteningTriple, int_tol: float = 1e-6) -> CoveringPoint:
    """Recover (z; p, q) from log-parameters: z = e^{w0}, the branch
    integers measuring the offsets from the principal logarithms."""
    z = snap_real(cmath.exp(t.w0))
    p_raw = (t.w0 - plog(z)) / (1j * PI)
    q_raw = (t.w1 - plog(1.0 / (1.0 - z))) / (1j * PI)
    out = []
    for name, raw in (("p", p_raw), ("q", q_raw)):
        n = int(round(raw.real))
        if abs(raw - n) > int_tol:
            raise NotEven(f"{name} = {raw} is not an integer")
        if n % 2:
            raise NotEven(f"{name} = {n} is odd")
        out.append(n)
    return CoveringPoint(z, out[0], out[1])


def from_covering_point(pt: CoveringPoint) -> FlatteningTriple:
    """Principal logarithms shifted by the branch integers; inverse of
    ``to_covering_point``.  The ledger records the two log atoms and the
    i*pi corrections."""
    log_z = plog(pt.z)
    log_inv = plog(1.0 / (1.0 - pt.z))
    w0 = log_z + pt.p * 1j * PI
    w1 = log_inv + pt.q * 1j * PI
    ledger = (
        ((1, log_z), (pt.p, 1j * PI)),
        ((1, log_inv), (pt.q, 1j * PI)),
        ((-1, log_z), (-1, log_inv), (-pt.p - pt.q, 1j * PI)),
    )
    return FlatteningTriple.from_w01(w0, w1, ledger)


def five_tuple(x: complex, y: complex,
               tol: Tolerances = DEFAULT_TOL) -> tuple[complex, ...]:
    """The tuple (x, y, y/x, (1-1/x)/(1-1/y), (1-x)/(1-y)) of cross-ratios
    of the five faces of a 5-point configuration.

    Raises DegenerateFT naming the first coordinate that hits 0 or 1.
    """
    x, y = complex(x), complex(y)
    for name, val in (("x", x), ("y", y)):
        if abs(val) <= tol.cmp or abs(val - 1.0) <= tol.cmp:
            raise DegenerateFT(f"{name} = {val} hits 0 or 1")
    if abs(x - y) <= tol.cmp:
        raise DegenerateFT("x = y makes coordinate 2 equal to 1")
    vals = (x, y, y / x,
            (1.0 - 1.0 / x) / (1.0 - 1.0 / y),
            (1.0 - x) / (1.0 - y))
    for i, val in enumerate(vals):
        if abs(val) <= tol.cmp or abs(val - 1.0) <= tol.cmp:
            raise DegenerateFT(f"coordinate {i} = {val} hits 0 or 1")
    return vals


# ---------------------------------------------------------------------------
# the ten edge equations

# Each entry: (edge label, [(sign, simplex index, log-parameter index), ...]).
# Edge [z_i z_j] lies in the three simplices not omitting i or j; the sign is
# + exactly when the omitted index is even.
EDGE_EQUATIONS: tuple[tuple[str, tuple[tuple[int, int, int], ...]], ...] = (
    ("z0z1", ((+1, 2, 0), (-1, 3, 0), (+1, 4, 0))),
    ("z0z2", ((-1, 1, 0), (-1, 3, 2), (+1, 4, 2))),
    ("z1z2", ((+1, 0, 0), (-1, 3, 1), (+1, 4, 1))),
    ("z1z3", ((+1, 0, 2), (+1, 2, 1), (+1, 4, 2))),
    ("z2z3", ((+1, 0, 1), (-1, 1, 1), (+1, 4, 0))),
    ("z2z4", ((+1, 0, 2), (-1, 1, 2), (-1, 3, 0))),
    ("z3z4", ((+1, 0, 0), (-1, 1, 0), (+1, 2, 0))),
    ("z3z0", ((-1, 1, 2), (+1, 2, 2), (+1, 4, 1))),
    ("z4z0", ((-1, 1, 1), (+1, 2, 1), (-1, 3, 1))),
    ("z4z1", ((+1, 0, 1), (+1, 2, 2), (-1, 3, 2))),
)


@dataclass(frozen=True)
class FlatteningReport:
    """Residuals of the ten signed edge sums, plus exact ledger cancellation
    when all five triples carry ledgers."""

    residuals: tuple[tuple[str, float], ...]
    exact: tuple[bool, ...] | None

    @property
    def max_residual(self) -> float:
        return max(r for _, r in self.residuals)

    def holds(self, tol_flat: float = DEFAULT_TOL.flat) -> bool:
        return self.max_residual <= tol_flat


def check_flattening_condition(
        triples: Sequence[FlatteningTriple],
        with_ledger: bool = False) -> FlatteningReport:
    """Evaluate the ten signed log-parameter sums over five flattenings.

    Report-only: callers decide what residual magnitude is acceptable.
    With ``with_ledger`` (and ledgers on all five triples) each equation is
    additionally checked for exact integer cancellation of its atoms.
    """
    if len(triples) != 5:
        raise ValueError("need flattenings of all five simplices")
    residuals = []
    exact: list[bool] | None = (
        [] if with_ledger and all(t.ledger is not None for t in triples)
        else None
    )
    for label, parts in EDGE_EQUATIONS:
        acc = 0j
        atoms: list[tuple[int, complex]] = []
        for sign, simplex, param in parts:
            acc += sign * triples[simplex].values()[param]
            if exact is not None:
                atoms.extend((sign * c, v)
                             for c, v in triples[simplex].ledger[param])
        residuals.append((label, abs(acc)))
        if exact is not None:
            exact.append(_atoms_cancel(atoms))
    return FlatteningReport(tuple(residuals),
                            tuple(exact) if exact is not None else None)


def _atoms_cancel(atoms: Iterable[tuple[int, complex]],
                  tol: float = DEFAULT_TOL.cmp) -> bool:
    """Exact integer cancellation of a signed multiset of log atoms,
    identifying atoms whose values agree within tol."""
    idx = FuzzyIndex(tol)
    counts: dict[int, int] = {}
    for coeff, value in atoms:
        if coeff == 0:
            continue
        key = idx.key((value.real, value.imag))
        counts[key] = counts.get(key, 0) + coeff
    return all(c == 0 for c in counts.values())


# ---------------------------------------------------------------------------
# formal sums of covering points


class PreBlochElement:
    """Formal integer combination of covering points, kept normalized:
    terms merge when z agrees within tolerance and the branch integers agree
    exactly; zero coefficients are dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[int, CoveringPoint]],
                 tol: Tolerances = DEFAULT_TOL):
        idx = FuzzyIndex(tol.cmp)
        merged: dict[tuple[int, int, int], tuple[int, CoveringPoint]] = {}
        for coeff, pt in terms:
            zkey = idx.key((pt.z.real, pt.z.imag))
            key = (zkey, pt.p, pt.q)
            if key in merged:
                old_c, old_pt = merged[key]
                merged[key] = (old_c + coeff, old_pt)
            else:
                merged[key] = (coeff, pt)
        self.terms: tuple[tuple[int, CoveringPoint], ...] = tuple(
            (c, pt) for c, pt in merged.values() if c != 0
        )

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "PreBlochElement") -> "PreBlochElement":
        return PreBlochElement(list(self.terms) + list(other.terms))

    def __neg__(self) -> "PreBlochElement":
        return PreBlochElement([(-c, pt) for c, pt in self.terms])

    def __sub__(self, other: "PreBlochElement") -> "PreBlochElement":
        return self + (-other)

    def __rmul__(self, n: int) -> "PreBlochElement":
        return PreBlochElement([(n * c, pt) for c, pt in self.terms])

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "PreBlochElement(0)"
        bits = [f"{c:+d}[{pt.z:.6g};{pt.p},{pt.q}]" for c, pt in self.terms]
        return "PreBlochElement(" + " ".join(bits) + ")"


def chi_hat(r) -> PreBlochElement:
    """The two-term combination [e^{2 pi i r}; 0, 2] - [e^{2 pi i r}; 0, 0]
    attached to a rational r in (0, 1)."""
    r = Fraction(r).limit_denominator(10**9) if not isinstance(r, Fraction) else r
    if r == 0:
        raise ChiAtZero("undefined at r = 0 (the exponential hits 1)")
    z = cmath.exp(2j * PI * float(r))
    return PreBlochElement([(1, CoveringPoint(z, 0, 2)),
                            (-1, CoveringPoint(z, 0, 0))])


# ---------------------------------------------------------------------------
# wedges of logarithms


class WedgeElement:
    """Formal integer combination of wedges a ^ b of log atoms.

    Atoms are identified by value (within tolerance): the exterior square of
    the additive group of C is a group of values, so two atoms carrying the
    same complex number are the same generator.  Cancellation over the
    identified atoms is exact integer arithmetic; when it succeeds the
    element is genuinely zero.  When it does not, nothing follows: relations
    between distinct log values are invisible, so the numeric pairing below
    is only a heuristic and is never reported as equality.
    """

    __slots__ = ("terms", "exact")

    def __init__(self, terms: Iterable[tuple[int, complex, complex]],
                 exact: bool = True, tol: Tolerances = DEFAULT_TOL):
        idx = FuzzyIndex(tol.cmp)
        merged: dict[tuple[int, int], int] = {}
        reps: dict[int, complex] = {}
        for coeff, a, b in terms:
            if coeff == 0:
                continue
            ka = idx.key((a.real, a.imag))
            kb = idx.key((b.real, b.imag))
            reps.setdefault(ka, a)
            reps.setdefault(kb, b)
            if ka == kb:
                continue  # a ^ a = 0
            if ka > kb:
                ka, kb = kb, ka
                coeff = -coeff
            merged[(ka, kb)] = merged.get((ka, kb), 0) + coeff
        self.terms: tuple[tuple[int, complex, complex], ...] = tuple(
            (c, reps[ka], reps[kb]) for (ka, kb), c in merged.items() if c != 0
        )
        self.exact = exact

    def __add__(self, other: "WedgeElement") -> "WedgeElement":
        return WedgeElement(list(self.terms) + list(other.terms),
                            exact=self.exact and other.exact)

    def __neg__(self) -> "WedgeElement":
        return WedgeElement([(-c, a, b) for c, a, b in self.terms],
                            exact=self.exact)

    def __sub__(self, other: "WedgeElement") -> "WedgeElement":
        return self + (-other)

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        """Formal cancellation succeeded.  Decisive when True."""
        return not self.terms

    def pairing(self) -> float:
        """The continuous antisymmetric form Im(conj(a) * b), summed.
        A heuristic invariant only: zero pairing proves nothing."""
        return sum(c * ((a.conjugate() * b).imag) for c, a, b in self.terms)

    def zero_report(self, tol: float = 1e-9) -> str:
        """'zero' on formal cancellation, else 'inconclusive' or 'nonzero'
        depending on the heuristic pairing.  Only 'zero' is a proof."""
        if self.is_zero():
            return "zero"
        if abs(self.pairing()) <= tol:
            return "inconclusive"
        return "nonzero"

    def __repr__(self) -> str:
        if not self.terms:
            return "WedgeElement(0)"
        bits = [f"{c:+d}({a:.4g})^({b:.4g})" for c, a, b in self.terms]
        return "WedgeElement(" + " ".join(bits) + ")"


def _triple_wedge(t: FlatteningTriple) -> WedgeElement:
    """w0 ^ w1 expanded bilinearly over the triple's atoms."""
    if t.ledger is None:
        return WedgeElement([(1, t.w0, t.w1)], exact=False)
    terms = [
        (ca * cb, va, vb)
        for ca, va in t.ledger[0]
        for cb, vb in t.ledger[1]
    ]
    return WedgeElement(terms, exact=True)


def nu_hat(element) -> WedgeElement:
    """Map into wedges of logarithms: a covering point (z; p, q) goes to
    (Log z + p pi i) ^ (Log 1/(1-z) + q pi i), extended by linearity.

    Accepts a PreBlochElement (numeric atoms, heuristic checks only) or a
    sequence of (coeff, FlatteningTriple) pairs; ledger-backed triples give
    exact cancellation.
    """
    if isinstance(element, PreBlochElement):
        pairs = [(c, from_covering_point(pt)) for c, pt in element]
        exact = False
    else:
        pairs = list(element)
        exact = True
    terms: list[tuple[int, complex, complex]] = []
    for coeff, triple in pairs:
        if triple.ledger is None:
            terms.append((coeff, triple.w0, triple.w1))
            exact = False
        else:
            terms.extend((coeff * ca * cb, va, vb)
                         for ca, va in triple.ledger[0]
                         for cb, vb in triple.ledger[1])
    return WedgeElement(terms, exact=exact)


def mu(v0: ProjVector, v1: ProjVector, v2: ProjVector,
       tol: Tolerances = DEFAULT_TOL) -> WedgeElement:
    """The three-term wedge of log-determinants attached to a vector triple:
    (01)^(02) - (01)^(12) + (02)^(12), writing (ij) for Log det(v_i, v_j)."""
    vs = (v0, v1, v2)
    logs = {}
    for i in range(3):
        for j in range(i + 1, 3):
            d = det_pair(vs[i], vs[j])
            if abs(d) <= tol.zero * vs[i].norm() * vs[j].norm():
                raise DegenerateConfig(f"det(v{i}, v{j}) vanishes")
            logs[(i, j)] = plog(d)
    return WedgeElement([
        (+1, logs[(0, 1)], logs[(0, 2)]),
        (-1, logs[(0, 1)], logs[(1, 2)]),
        (+1, logs[(0, 2)], logs[(1, 2)]),
    ], exact=True)
