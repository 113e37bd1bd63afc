"""Tolerance-aware identification of float vectors.

Normalization of formal sums (chains, pre-Bloch elements, wedges) needs to
merge terms whose numeric keys agree up to floating-point noise.  Plain grid
rounding fails when two nearly-equal values straddle a cell boundary, so
lookups here also probe the neighbouring cell whenever a coordinate sits
within a guard band of the boundary.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable


class FuzzyIndex:
    """Assigns stable integer ids to float vectors, identifying vectors that
    agree elementwise within ``tol``."""

    def __init__(self, tol: float, guard: float | None = None):
        self.tol = tol
        # guard band: well above fp noise, well below the cell size
        self.guard = tol * 1e-3 if guard is None else guard
        self._cells: dict[tuple[int, ...], list[int]] = {}
        self._reps: list[tuple[float, ...]] = []

    def __len__(self) -> int:
        return len(self._reps)

    def representative(self, ident: int) -> tuple[float, ...]:
        return self._reps[ident]

    def key(self, values: Iterable[float]) -> int:
        vals = tuple(map(float, values))
        tol = self.tol
        guard_scaled = self.guard / tol
        primary = []
        split_at: list[tuple[int, int]] = []  # (position, alternative cell)
        for i, x in enumerate(vals):
            scaled = x / tol
            cell = int(round(scaled))
            primary.append(cell)
            off = scaled - cell  # in [-1/2, 1/2], boundaries at +-1/2
            if 0.5 - off < guard_scaled:
                split_at.append((i, cell + 1))
            elif 0.5 + off < guard_scaled:
                split_at.append((i, cell - 1))
        primary_key = tuple(primary)
        if not split_at:
            cands = [primary_key]
        else:
            split_at = split_at[:6]  # cap the probe fan-out
            cands = [primary_key]
            for choice in product(*(((i, None), (i, alt)) for i, alt in split_at)):
                cells = list(primary)
                changed = False
                for i, alt in choice:
                    if alt is not None:
                        cells[i] = alt
                        changed = True
                if changed:
                    cands.append(tuple(cells))
        for cell in cands:
            for ident in self._cells.get(cell, ()):
                rep = self._reps[ident]
                if len(rep) == len(vals) and all(
                    abs(a - b) <= tol for a, b in zip(rep, vals)
                ):
                    return ident
        ident = len(self._reps)
        self._reps.append(vals)
        self._cells.setdefault(primary_key, []).append(ident)
        return ident


def complex_parts(zs: Iterable[complex]) -> list[float]:
    """Flatten complex values to alternating re/im floats for indexing."""
    out: list[float] = []
    for z in zs:
        out.append(z.real)
        out.append(z.imag)
    return out
