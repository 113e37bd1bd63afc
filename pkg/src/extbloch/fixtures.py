"""Named chain fixtures: torsion cycles, five-term boundaries, random chains."""

from __future__ import annotations

import numpy as np

from .config import DEFAULT_TOL, Tolerances
from .core import INF, GroupElement, is_inf, random_sl2, rotation
from .chains import BarChain, HomChain, hom_boundary, hom_to_inhom, is_good


def torsion_cycle(n: int) -> BarChain:
    """The rotation cycle sum_{i=0}^{n-1} [t | t^i | t], t a rotation by
    2 pi / n.  A 3-cycle by telescoping; the only desk-scale family with a
    nonzero evaluation."""
    if n < 2:
        raise ValueError("n must be >= 2")
    t = rotation(n, 1)
    terms = []
    for i in range(n):
        terms.append((1, (t, rotation(n, i), t)))
    return BarChain(3, terms)


def _point_to_matrix(z) -> GroupElement:
    """A matrix sending infinity to the given boundary point."""
    if is_inf(z):
        return GroupElement.identity()
    return GroupElement(z, -1.0, 1.0, 0.0)


def five_term_boundary(x: complex, y: complex) -> BarChain:
    """Boundary 3-cycle whose (1,0)-configuration realizes the five-term
    tuple of (x, y).

    The five ideal points (0, inf, 1, A, B) with A = (1-x)/(1-y) and
    B = y(1-x)/(x(1-y)) have face cross-ratios exactly
    (x, y, y/x, (1-1/x)/(1-1/y), (1-x)/(1-y)); the matrices below move
    infinity to those points.
    """
    x, y = complex(x), complex(y)
    a_pt = (1.0 - x) / (1.0 - y)
    b_pt = y * (1.0 - x) / (x * (1.0 - y))
    points = [0.0 + 0j, INF, 1.0 + 0j, a_pt, b_pt]
    mats = tuple(_point_to_matrix(z) for z in points)
    top = HomChain(4, [(1, mats)], coinvariant=True)
    return hom_to_inhom(hom_boundary(top))


def random_good_hom_chain(rng_or_seed, degree: int, n_terms: int,
                          tol: Tolerances = DEFAULT_TOL,
                          coef_range: int = 2) -> HomChain:
    """Random homogeneous chain with good tuples and nonzero coefficients."""
    rng = np.random.default_rng(rng_or_seed) if isinstance(
        rng_or_seed, (int, np.random.SeedSequence)) else rng_or_seed
    terms = []
    while len(terms) < n_terms:
        tup = tuple(random_sl2(rng) for _ in range(degree + 1))
        probe = HomChain(degree, [(1, tup)])
        ok, _ = is_good(probe, tol)
        if not ok:
            continue
        coeff = 0
        while coeff == 0:
            coeff = int(rng.integers(-coef_range, coef_range + 1))
        terms.append((coeff, tup))
    return HomChain(degree, terms, coinvariant=True)


def random_boundary_cycle(rng_or_seed, n_terms: int = 2,
                          tol: Tolerances = DEFAULT_TOL) -> BarChain:
    """A random degree-3 cycle that is a boundary (evaluates to zero)."""
    rng = np.random.default_rng(rng_or_seed) if isinstance(
        rng_or_seed, (int, np.random.SeedSequence)) else rng_or_seed
    top = random_good_hom_chain(rng, 4, n_terms, tol)
    return hom_to_inhom(hom_boundary(top))
