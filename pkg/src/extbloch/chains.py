"""Formal chain algebra over SL(2,C).

Chains are integer combinations of tuples of group elements, in two
presentations: bar symbols [g1|...|gn] and homogeneous (n+1)-tuples
(g0,...,gn) carrying the left translation action.  The conversions

    [g1|...|gn]  ->  (1, g1, g1 g2, ..., g1...gn)
    (g0,...,gn)  ->  [g0^-1 g1 | ... | g_{n-1}^-1 gn]

are mutually inverse chain isomorphisms once homogeneous tuples are taken
up to simultaneous left translation ("coinvariant" form, first entry 1).

``repair_to_good`` replaces a cycle by a homologous one avoiding all
g_i = +-g_j coincidences, together with an explicit homotopy certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .config import DEFAULT_TOL, Tolerances
from .core import GroupElement, ProjVector, det_pair, random_sl2, random_vector
from .errors import RepairFailed, SamplingExhausted
from .quantize import FuzzyIndex

GTuple = tuple[GroupElement, ...]

MAX_DEGREE = 4  # the pipeline needs cycles (3) and homotopies (4) only


def _entry_floats(gs: Iterable[GroupElement]) -> list[float]:
    out: list[float] = []
    for g in gs:
        for x in g.entries():
            out.append(x.real)
            out.append(x.imag)
    return out


def _normalize(terms: Iterable[tuple[int, GTuple]],
               tol: float) -> tuple[tuple[int, GTuple], ...]:
    idx = FuzzyIndex(tol)
    merged: dict[int, tuple[int, GTuple]] = {}
    order: list[int] = []
    for coeff, sym in terms:
        if not isinstance(coeff, (int, np.integer)):
            raise TypeError(f"coefficients must be integers, got {coeff!r}")
        key = idx.key(_entry_floats(sym))
        if key in merged:
            c, s = merged[key]
            merged[key] = (c + coeff, s)
        else:
            merged[key] = (coeff, sym)
            order.append(key)
    return tuple((merged[k][0], merged[k][1]) for k in order if merged[k][0] != 0)


class BarChain:
    """Integer combination of bar symbols [g1|...|gn], all of one degree."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Iterable[tuple[int, GTuple]],
                 tol: Tolerances = DEFAULT_TOL):
        if not 0 <= degree <= MAX_DEGREE:
            raise ValueError(f"degree {degree} outside supported range")
        terms = list(terms)
        for _, sym in terms:
            if len(sym) != degree:
                raise ValueError("all symbols must match the chain degree")
        self.degree = degree
        self.terms = _normalize(terms, tol.cmp)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_empty(self) -> bool:
        return not self.terms

    def __add__(self, other: "BarChain") -> "BarChain":
        if other.is_empty():
            return self
        if self.is_empty():
            return other
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return BarChain(self.degree, list(self.terms) + list(other.terms))

    def __neg__(self) -> "BarChain":
        return BarChain(self.degree, [(-c, s) for c, s in self.terms])

    def __sub__(self, other: "BarChain") -> "BarChain":
        return self + (-other)

    def __rmul__(self, n: int) -> "BarChain":
        return BarChain(self.degree, [(n * c, s) for c, s in self.terms])

    def __repr__(self) -> str:
        return f"BarChain(degree={self.degree}, {len(self.terms)} terms)"


class HomChain:
    """Integer combination of homogeneous tuples (g0,...,gn).

    With ``coinvariant=True`` every tuple is left-translated so its first
    entry is the identity before normalization; this is the quotient by the
    diagonal group action, where cycles live.
    """

    __slots__ = ("degree", "terms", "coinvariant")

    def __init__(self, degree: int, terms: Iterable[tuple[int, GTuple]],
                 coinvariant: bool = False, tol: Tolerances = DEFAULT_TOL):
        if not 0 <= degree <= MAX_DEGREE:
            raise ValueError(f"degree {degree} outside supported range")
        prepared = []
        for coeff, tup in terms:
            if len(tup) != degree + 1:
                raise ValueError("tuple length must be degree + 1")
            if coinvariant:
                tup = canonical_tuple(tup)
            prepared.append((coeff, tup))
        self.degree = degree
        self.coinvariant = coinvariant
        self.terms = _normalize(prepared, tol.cmp)

    @classmethod
    def _trusted(cls, degree: int, terms: tuple[tuple[int, GTuple], ...],
                 coinvariant: bool = False) -> "HomChain":
        """Internal: wrap terms already known to be normalized (distinct
        symbols, nonzero coefficients) without re-merging."""
        obj = cls.__new__(cls)
        obj.degree = degree
        obj.terms = terms
        obj.coinvariant = coinvariant
        return obj

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_empty(self) -> bool:
        return not self.terms

    def __add__(self, other: "HomChain") -> "HomChain":
        if other.is_empty():
            return self
        if self.is_empty():
            return other
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return HomChain(self.degree, list(self.terms) + list(other.terms),
                        coinvariant=self.coinvariant or other.coinvariant)

    def __neg__(self) -> "HomChain":
        return HomChain(self.degree, [(-c, t) for c, t in self.terms],
                        coinvariant=self.coinvariant)

    def __sub__(self, other: "HomChain") -> "HomChain":
        return self + (-other)

    def __rmul__(self, n: int) -> "HomChain":
        return HomChain(self.degree, [(n * c, t) for c, t in self.terms],
                        coinvariant=self.coinvariant)

    def as_coinvariant(self) -> "HomChain":
        return HomChain(self.degree, self.terms, coinvariant=True)

    def __repr__(self) -> str:
        tag = ", coinvariant" if self.coinvariant else ""
        return f"HomChain(degree={self.degree}, {len(self.terms)} terms{tag})"


def canonical_tuple(tup: GTuple) -> GTuple:
    """Left-translate so the first entry is the identity.  The diagonal
    action on tuples is free, so this is a true normal form."""
    inv = tup[0].inverse()
    return tuple(inv @ g for g in tup)


def translate_tuple(h: GroupElement, tup: GTuple) -> GTuple:
    return tuple(h @ g for g in tup)


# ---------------------------------------------------------------------------
# conversions and boundaries


def inhom_to_hom(c: BarChain) -> HomChain:
    """[g1|...|gn] -> (1, g1, g1 g2, ..., g1...gn), termwise."""
    out = []
    for coeff, sym in c:
        tup = [GroupElement.identity()]
        for g in sym:
            tup.append(tup[-1] @ g)
        out.append((coeff, tuple(tup)))
    return HomChain(c.degree, out, coinvariant=True)


def hom_to_inhom(c: HomChain) -> BarChain:
    """(g0,...,gn) -> [g0^-1 g1 | ... | g_{n-1}^-1 gn], termwise.
    Independent of the coinvariant representative."""
    out = []
    for coeff, tup in c:
        sym = tuple(tup[i].inverse() @ tup[i + 1] for i in range(len(tup) - 1))
        out.append((coeff, sym))
    return BarChain(c.degree, out)


def bar_boundary(c: BarChain) -> BarChain:
    """Alternating sum dropping the first symbol, merging adjacent pairs,
    and dropping the last."""
    if c.degree < 1:
        raise ValueError("boundary needs degree >= 1")
    out = []
    n = c.degree
    for coeff, sym in c:
        out.append((coeff, sym[1:]))
        for i in range(n - 1):
            merged = sym[:i] + (sym[i] @ sym[i + 1],) + sym[i + 2:]
            out.append((coeff * (-1) ** (i + 1), merged))
        out.append((coeff * (-1) ** n, sym[:-1]))
    return BarChain(c.degree - 1, out)


def hom_boundary(c: HomChain) -> HomChain:
    """Alternating face sum; faces of coinvariant chains are re-canonicalized
    before merging."""
    if c.degree < 1:
        raise ValueError("boundary needs degree >= 1")
    out = []
    for coeff, tup in c:
        for i in range(len(tup)):
            out.append((coeff * (-1) ** i, tup[:i] + tup[i + 1:]))
    return HomChain(c.degree - 1, out, coinvariant=c.coinvariant)


def cone(g: GroupElement, c: HomChain) -> HomChain:
    """Prepend g to every tuple.  Satisfies d(cone) = id - cone(d)."""
    if c.degree + 1 > MAX_DEGREE:
        raise ValueError("cone would exceed the supported degree range")
    # prepending preserves distinctness of symbols, so normalization holds
    return HomChain._trusted(
        c.degree + 1, tuple((coeff, (g,) + tup) for coeff, tup in c))


def is_cycle(c: BarChain, tol: Tolerances = DEFAULT_TOL) -> tuple[bool, BarChain]:
    """True when the bar boundary normalizes to the empty chain; the
    residual chain is returned either way."""
    if c.degree == 0 or c.is_empty():
        return True, BarChain(max(c.degree - 1, 0), [])
    res = bar_boundary(c)
    return res.is_empty(), res


def conjugate_chain(g: GroupElement, c: BarChain) -> BarChain:
    """Entrywise conjugation g . g_i . g^-1 of every symbol."""
    ginv = g.inverse()
    return BarChain(c.degree,
                    [(coeff, tuple(g @ h @ ginv for h in sym)) for coeff, sym in c])


def complex_conjugate_chain(c: BarChain) -> BarChain:
    """Entrywise complex conjugation of every matrix."""
    return BarChain(c.degree,
                    [(coeff, tuple(h.conjugate_entries() for h in sym))
                     for coeff, sym in c])


# ---------------------------------------------------------------------------
# goodness predicates


def _hom_tuples(c) -> list[tuple[int, GTuple]]:
    if isinstance(c, BarChain):
        return list(inhom_to_hom(c))
    return list(c)


def is_good(c, tol: Tolerances = DEFAULT_TOL) -> tuple[bool, list]:
    """All pairs within each homogeneous tuple satisfy g_i != +-g_j.

    Returns (ok, offending): offenders are (term index, i, j) triples.
    """
    offending = []
    for t_idx, (_, tup) in enumerate(_hom_tuples(c)):
        for i in range(len(tup)):
            for j in range(i + 1, len(tup)):
                if tup[i].sign_equiv(tup[j], tol.cmp):
                    offending.append((t_idx, i, j))
    return not offending, offending


def is_v_good(c, v: ProjVector, tol: Tolerances = DEFAULT_TOL) -> tuple[bool, list]:
    """All pairs satisfy |det(g_i v, g_j v)| above the scale-relative
    threshold.  Returns (ok, offending pairs)."""
    offending = []
    for t_idx, (_, tup) in enumerate(_hom_tuples(c)):
        vecs = [g.apply(v) for g in tup]
        for i in range(len(vecs)):
            for j in range(i + 1, len(vecs)):
                scale = vecs[i].norm() * vecs[j].norm()
                if abs(det_pair(vecs[i], vecs[j])) <= tol.vgood * scale:
                    offending.append((t_idx, i, j))
    return not offending, offending


def sample_generic_v(c, rng_or_seed, max_attempts: int = 1000,
                     tol: Tolerances = DEFAULT_TOL) -> tuple[ProjVector, int]:
    """Rejection-sample a vector making the chain v-good.

    The failure locus is a finite union of hypersurfaces, so a good chain
    succeeds almost surely within a few draws.  Returns (v, attempts).
    """
    rng = np.random.default_rng(rng_or_seed) if isinstance(
        rng_or_seed, (int, np.random.SeedSequence)) else rng_or_seed
    for attempt in range(1, max_attempts + 1):
        v = random_vector(rng)
        ok, _ = is_v_good(c, v, tol)
        if ok:
            return v, attempt
    raise SamplingExhausted(
        f"no v-good vector in {max_attempts} attempts; "
        "the chain is likely not good or the tolerance is too tight")


# ---------------------------------------------------------------------------
# repair of cycles to good representatives


@dataclass
class RepairResult:
    """A good cycle homologous to the input, with the certificate.

    ``homotopy`` is a degree (n+1) coinvariant chain H with
    boundary(H) = phi_image - original_hom, verifiable directly.
    """

    chain: BarChain
    phi_image: HomChain
    homotopy: HomChain
    original_hom: HomChain


class _ConeRepairer:
    """Recursive cone construction of a chain map phi into good chains and a
    homotopy H with dH + Hd = phi - id.

    Both maps are defined on canonical orbit representatives and extended
    equivariantly; memoization keys tuples through quantized entries so
    shared faces receive identical images.
    """

    def __init__(self, rng, tol: Tolerances, max_attempts: int = 1000):
        self.rng = rng
        self.tol = tol
        self.max_attempts = max_attempts
        self._index = FuzzyIndex(tol.cmp)
        self._phi_memo: dict[int, HomChain] = {}
        self._h_memo: dict[int, HomChain] = {}

    def _key(self, tup: GTuple) -> int:
        return self._index.key(_entry_floats(tup))

    def _generic_avoiding(self, chains: Sequence[HomChain]) -> GroupElement:
        avoid: list[GroupElement] = []
        for chain in chains:
            for _, tup in chain:
                avoid.extend(tup)
        for _ in range(self.max_attempts):
            g = random_sl2(self.rng)
            margin = min(
                (min(max(abs(x - y) for x, y in zip(g.entries(), h.entries())),
                     max(abs(x + y) for x, y in zip(g.entries(), h.entries())))
                 for h in avoid),
                default=1.0,
            )
            if margin > 1e-3:
                return g
        raise RepairFailed("could not sample a generic cone apex")

    def phi(self, tup: GTuple) -> HomChain:
        first = tup[0]
        canon = canonical_tuple(tup)
        key = self._key(canon)
        if key not in self._phi_memo:
            if len(canon) == 1:
                img = HomChain(0, [(1, canon)])
            else:
                img = self.phi_chain(_raw_boundary_terms(canon))
                apex = self._generic_avoiding([img])
                img = cone(apex, img)
            self._phi_memo[key] = img
        return _translate_chain(first, self._phi_memo[key])

    def phi_chain(self, terms: Iterable[tuple[int, GTuple]]) -> HomChain:
        collected: list[tuple[int, GTuple]] = []
        degree = None
        for coeff, tup in terms:
            part = self.phi(tup)
            degree = part.degree
            collected.extend((coeff * c, t) for c, t in part)
        if degree is None:
            raise ValueError("empty chain")
        return HomChain(degree, collected)

    def homotopy(self, tup: GTuple) -> HomChain:
        first = tup[0]
        canon = canonical_tuple(tup)
        key = self._key(canon)
        if key not in self._h_memo:
            n = len(canon) - 1
            if n == 0:
                h = HomChain(1, [])
            else:
                rest_terms = list(self.phi(canon)) + [(-1, canon)]
                lower = self.homotopy_chain(_raw_boundary_terms(canon), n)
                rest_terms.extend((-c, t) for c, t in lower)
                rest = HomChain(n, rest_terms)
                apex = self._generic_avoiding([rest])
                h = cone(apex, rest)
            self._h_memo[key] = h
        return _translate_chain(first, self._h_memo[key])

    def homotopy_chain(self, terms: Iterable[tuple[int, GTuple]],
                       degree: int | None = None) -> HomChain:
        collected: list[tuple[int, GTuple]] = []
        for coeff, tup in terms:
            part = self.homotopy(tup)
            degree = part.degree
            collected.extend((coeff * c, t) for c, t in part)
        return HomChain(degree if degree is not None else 1, collected)


def _raw_boundary_terms(tup: GTuple) -> list[tuple[int, GTuple]]:
    return [((-1) ** i, tup[:i] + tup[i + 1:]) for i in range(len(tup))]


def _translate_chain(h: GroupElement, c: HomChain) -> HomChain:
    if c.is_empty():
        return c
    # translation is injective on tuples: normalization is preserved
    return HomChain._trusted(c.degree, tuple((coeff, translate_tuple(h, tup))
                                             for coeff, tup in c))


def _repair_core(c: BarChain, seed, tol: Tolerances,
                 build_homotopy: bool) -> RepairResult:
    ok, residual = is_cycle(c, tol)
    if not ok:
        raise ValueError(f"input is not a cycle; boundary has {len(residual)} terms")
    if c.is_empty():
        empty = HomChain(c.degree, [], coinvariant=True)
        return RepairResult(
            chain=c, phi_image=empty,
            homotopy=HomChain(min(c.degree + 1, MAX_DEGREE), [],
                              coinvariant=True),
            original_hom=empty)
    rng = np.random.default_rng(seed)
    hom = inhom_to_hom(c)
    rep = _ConeRepairer(rng, tol)
    phi_img = rep.phi_chain(hom.terms).as_coinvariant()
    good_ok, offenders = is_good(phi_img, tol)
    if not good_ok:
        raise RepairFailed(f"cone image not good: offenders {offenders[:3]}")
    if build_homotopy:
        h = rep.homotopy_chain(hom.terms, hom.degree + 1).as_coinvariant()
        certificate_residual = hom_boundary(h) - (phi_img - hom)
        if not certificate_residual.is_empty():
            raise RepairFailed(
                f"homotopy certificate failed: "
                f"{len(certificate_residual)} residual terms")
    else:
        h = HomChain(min(hom.degree + 1, MAX_DEGREE), [], coinvariant=True)
    return RepairResult(chain=hom_to_inhom(phi_img), phi_image=phi_img,
                        homotopy=h, original_hom=hom)


def repair_with_certificate(c: BarChain, seed,
                            tol: Tolerances = DEFAULT_TOL) -> RepairResult:
    """Replace a cycle by a homologous good cycle via the recursive cone
    chain map, returning the explicit, verified homotopy certificate."""
    return _repair_core(c, seed, tol, build_homotopy=True)


def repair_to_good(c: BarChain, seed, tol: Tolerances = DEFAULT_TOL) -> BarChain:
    """As repair_with_certificate but returning only the repaired chain.
    Already-good cycles still pass through the chain map, keeping the
    output distribution independent of the input's goodness."""
    return repair_with_certificate(c, seed, tol).chain
