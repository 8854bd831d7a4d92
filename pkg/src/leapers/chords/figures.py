"""Finite vertex sets of the infinite grid graph, and what they realise."""

from __future__ import annotations

import random
from collections import deque
from typing import Iterable, Optional, Union

from leapers.core.paths import Box
from leapers.core.vec import Vec, as_vec

UNIT_STEPS: tuple[Vec, ...] = ((1, 0), (-1, 0), (0, 1), (0, -1))


class Figure(frozenset):
    """A nonempty set of integer cells; grid edges join cells at unit distance.

    Connectivity is not enforced here, since :func:`is_connected` has to be
    able to answer no.
    """

    def __new__(cls, cells: Iterable[Iterable[int]] = ()):
        self = super().__new__(cls, (as_vec(c) for c in cells))
        if not self:
            raise ValueError("a figure needs at least one cell")
        return self

    def __repr__(self) -> str:
        return f"Figure({sorted(self)})"


FigureLike = Union[Figure, Iterable[Vec]]


def _cells(figure: FigureLike) -> frozenset:
    return figure if isinstance(figure, frozenset) else frozenset(map(as_vec, figure))


def is_connected(figure: FigureLike) -> bool:
    cells = _cells(figure)
    if not cells:
        return False
    start = next(iter(cells))
    seen = {start}
    todo = deque([start])
    while todo:
        x, y = todo.popleft()
        for dx, dy in UNIT_STEPS:
            nb = (x + dx, y + dy)
            if nb in cells and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return len(seen) == len(cells)


def realizes(figure: FigureLike, u: Vec) -> Optional[tuple[Vec, Vec]]:
    """Return cells ``(a, b)`` with ``b - a == u``, smallest ``a`` first, or None."""
    cells = _cells(figure)
    ux, uy = u
    for a in sorted(cells):
        b = (a[0] + ux, a[1] + uy)
        if b in cells:
            return a, b
    return None


def realized_set(figure: FigureLike) -> frozenset[Vec]:
    cells = list(_cells(figure))
    out = set()
    for ax, ay in cells:
        for bx, by in cells:
            if ax != bx or ay != by:
                out.add((bx - ax, by - ay))
    return frozenset(out)


def random_figure(seed, target_size: int, bounding: Box) -> Figure:
    """Grow a connected figure by random boundary accretion inside ``bounding``.

    Starts from the box centre. Stops early if the box fills up.
    """
    if target_size < 1:
        raise ValueError("target_size must be positive")
    rng = random.Random(seed)
    start = ((bounding.x_min + bounding.x_max) // 2, (bounding.y_min + bounding.y_max) // 2)
    cells = {start}
    frontier: set = set()

    def grow(c: Vec) -> None:
        for dx, dy in UNIT_STEPS:
            nb = (c[0] + dx, c[1] + dy)
            if nb in bounding and nb not in cells:
                frontier.add(nb)

    grow(start)
    while len(cells) < target_size and frontier:
        c = rng.choice(sorted(frontier))
        frontier.discard(c)
        cells.add(c)
        grow(c)
    return Figure(cells)


def random_snake(seed, target_size: int) -> Figure:
    """A random self-avoiding unit-step walk, stopped early if it traps itself.

    Thin figures like these realise far fewer vectors than blobs, which is
    what the deeper fork traces need.
    """
    rng = random.Random(seed)
    cells = [(0, 0)]
    seen = {(0, 0)}
    while len(cells) < target_size:
        x, y = cells[-1]
        opts = [(x + dx, y + dy) for dx, dy in UNIT_STEPS if (x + dx, y + dy) not in seen]
        if not opts:
            break
        c = rng.choice(opts)
        cells.append(c)
        seen.add(c)
    return Figure(cells)


def parse_cells(text: str) -> list[Vec]:
    """Parse ``"x,y;x,y;..."`` into a list of vectors."""
    out = []
    for chunk in text.replace(" ", "").split(";"):
        if chunk:
            x, y = chunk.split(",")
            out.append((int(x), int(y)))
    return out
