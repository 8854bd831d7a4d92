"""Discrete checks of the universal chord theorem and the quadrilateral lemma."""

from __future__ import annotations

from typing import NamedTuple, Optional

from leapers.chords.figures import FigureLike, _cells, is_connected, realizes
from leapers.core.vec import Vec, cross, scale, sub
from leapers.errors import NotConvex, PreconditionUnmet


def chord_check(figure: FigureLike, v: Vec, n: int) -> bool:
    """Given a connected figure realising ``n*v``, report whether it realises ``v``.

    The chord theorem says this is always True.
    """
    if n < 1:
        raise ValueError("n must be positive")
    cells = _cells(figure)
    if not is_connected(cells):
        raise PreconditionUnmet("figure is not connected")
    if realizes(cells, scale(n, v)) is None:
        raise PreconditionUnmet(f"figure does not realise {scale(n, v)}")
    return realizes(cells, v) is not None


class Side(NamedTuple):
    name: str
    vector: Vec
    witness: tuple[Vec, Vec]


def is_strictly_convex(A: Vec, B: Vec, C: Vec, D: Vec) -> bool:
    pts = (A, B, C, D)
    turns = [cross(sub(pts[(i + 1) % 4], pts[i]), sub(pts[(i + 2) % 4], pts[(i + 1) % 4]))
             for i in range(4)]
    return all(t > 0 for t in turns) or all(t < 0 for t in turns)


def quad_sides(A: Vec, B: Vec, C: Vec, D: Vec) -> list[tuple[str, Vec]]:
    return [("AB", sub(A, B)), ("BC", sub(B, C)), ("CD", sub(C, D)), ("DA", sub(D, A))]


def quad_check(figure: FigureLike, A: Vec, B: Vec, C: Vec, D: Vec) -> Optional[Side]:
    """Find a side of convex ABCD realised by a figure realising both diagonals.

    Returns None only if the lemma fails, which would mean a bug here.
    """
    if not is_strictly_convex(A, B, C, D):
        raise NotConvex(f"{A}, {B}, {C}, {D} is not a strictly convex quadrilateral")
    cells = _cells(figure)
    if not is_connected(cells):
        raise PreconditionUnmet("figure is not connected")
    for diag in (sub(A, C), sub(B, D)):
        if realizes(cells, diag) is None:
            raise PreconditionUnmet(f"figure does not realise diagonal {diag}")
    for name, vec in quad_sides(A, B, C, D):
        w = realizes(cells, vec)
        if w is not None:
            return Side(name, vec, w)
    return None
