"""Enumeration of fixed polyominoes (Redelmeier's method)."""

from __future__ import annotations

from typing import Iterator

from leapers.chords.figures import Figure
from leapers.core.vec import Vec


def _allowed(c: Vec) -> bool:
    # cells of the half-plane above the origin row, plus the origin row to the right
    return c[1] > 0 or (c[1] == 0 and c[0] >= 0)


def fixed_polyominoes(max_cells: int, min_cells: int = 1) -> Iterator[Figure]:
    """Yield every fixed polyomino with ``min_cells..max_cells`` cells exactly once.

    Each is translated so its lowest row starts with the origin at its
    leftmost cell.
    """
    if max_cells < 1:
        return
    poly: list[Vec] = []
    seen: set = {(0, 0)}

    def rec(untried: list[Vec]) -> Iterator[Figure]:
        untried = list(untried)
        while untried:
            c = untried.pop()
            poly.append(c)
            if len(poly) >= min_cells:
                yield Figure(poly)
            if len(poly) < max_cells:
                added = []
                for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                    nb = (c[0] + dx, c[1] + dy)
                    if _allowed(nb) and nb not in seen:
                        seen.add(nb)
                        added.append(nb)
                yield from rec(untried + added)
                for nb in added:
                    seen.discard(nb)
            poly.pop()

    yield from rec([(0, 0)])


def count_fixed_polyominoes(max_cells: int) -> list[int]:
    counts = [0] * (max_cells + 1)
    for f in fixed_polyominoes(max_cells):
        counts[len(f)] += 1
    return counts[1:]
