"""Leaper paths, bounding boxes and difference sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from leapers.core.leaper import Leaper
from leapers.core.vec import Vec, add, as_vec, bounds, rot90, sub
from leapers.errors import NotALeap, SelfIntersection


@dataclass(frozen=True)
class Box:
    x_min: int
    x_max: int
    y_min: int
    y_max: int

    def __post_init__(self) -> None:
        if self.x_min > self.x_max or self.y_min > self.y_max:
            raise ValueError(f"empty box {self}")

    @classmethod
    def of(cls, points: Iterable[Vec]) -> "Box":
        return cls(*bounds(points))

    @classmethod
    def square(cls, n: int) -> "Box":
        """The board ``[n]^2``."""
        return cls(1, n, 1, n)

    @property
    def size_x(self) -> int:
        return self.x_max - self.x_min + 1

    @property
    def size_y(self) -> int:
        return self.y_max - self.y_min + 1

    @property
    def size(self) -> tuple[int, int]:
        return self.size_x, self.size_y

    def __contains__(self, v: Vec) -> bool:
        return self.x_min <= v[0] <= self.x_max and self.y_min <= v[1] <= self.y_max


@dataclass(frozen=True)
class LeaperPath:
    """A self-avoiding vertex sequence whose steps are leaps of ``leaper``."""

    vertices: tuple[Vec, ...]
    leaper: Leaper

    def __post_init__(self) -> None:
        verts = tuple(as_vec(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if not verts:
            raise ValueError("a path needs at least one vertex")
        for a, b in zip(verts, verts[1:]):
            if not self.leaper.is_leap(sub(b, a)):
                raise NotALeap(f"{a} -> {b} is not a {self.leaper} leap")
        if len(set(verts)) != len(verts):
            raise SelfIntersection("path revisits a vertex")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    @property
    def moves(self) -> list[Vec]:
        v = self.vertices
        return [sub(b, a) for a, b in zip(v, v[1:])]

    @property
    def box(self) -> Box:
        return Box.of(self.vertices)

    def translate(self, t: Vec) -> "LeaperPath":
        return LeaperPath(tuple(add(v, t) for v in self.vertices), self.leaper)


def path_from_moves(start: Vec, moves: Iterable[Vec], leaper: Leaper) -> LeaperPath:
    verts = [as_vec(start)]
    seen = {verts[0]}
    for mv in moves:
        mv = as_vec(mv)
        if not leaper.is_leap(mv):
            raise NotALeap(f"{mv} is not a {leaper} leap")
        nxt = add(verts[-1], mv)
        if nxt in seen:
            raise SelfIntersection(f"path returns to {nxt} after {len(verts)} vertices")
        seen.add(nxt)
        verts.append(nxt)
    return LeaperPath(tuple(verts), leaper)


def rotate90(path: LeaperPath) -> LeaperPath:
    return LeaperPath(tuple(rot90(v) for v in path.vertices), path.leaper)


def difference_set(vertices: Sequence[Vec]) -> frozenset[Vec]:
    """All nonzero differences ``u - v`` between distinct vertices.

    Quadratic in the vertex count; fine up to roughly 10^4 vertices.
    """
    verts = list(vertices)
    out = set()
    for i, (ux, uy) in enumerate(verts):
        for vx, vy in verts[i + 1:]:
            out.add((ux - vx, uy - vy))
            out.add((vx - ux, vy - uy))
    return frozenset(out)
