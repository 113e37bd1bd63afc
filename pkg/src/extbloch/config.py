"""Numeric tolerances and run configuration shared across the library."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Comparison thresholds used throughout.

    det:   allowed |ad - bc - 1| when constructing a group element
    cmp:   equality threshold for complex scalars and matrix entries
    zero:  absolute "is zero" threshold
    vgood: scale-relative determinant threshold for v-goodness
    flat:  residual threshold for the ten edge equations
    """

    det: float = 1e-9
    cmp: float = 1e-8
    zero: float = 1e-12
    vgood: float = 1e-7
    flat: float = 1e-9

    def __post_init__(self):
        for name in ("det", "cmp", "zero", "vgood", "flat"):
            if getattr(self, name) <= 0:
                raise ValueError(f"tolerance {name} must be positive")


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class RunConfig:
    """Configuration for an evaluation run: tolerances, seed, trial count."""

    tol: Tolerances = DEFAULT_TOL
    seed: int = 0
    trials: int = 5

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
