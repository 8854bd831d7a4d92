"""Grid embeddings as products of two leaper paths.

An embedding of the m x m grid into a leaper graph sends grid vertex
``(i, j)`` to ``points[i][j]``. Every such embedding factors as
``points[i][j] = alpha[i] + beta[j]``, and a pair of paths yields an
embedding into the n x n board exactly when their difference sets are
disjoint and their bounding boxes fit (see :func:`check_pair`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from leapers.core.leaper import Leaper
from leapers.core.paths import Box, LeaperPath, difference_set
from leapers.core.vec import Vec, add, as_vec, sub
from leapers.errors import LengthMismatch, OverlapError, RhombusViolation


@dataclass(frozen=True)
class GridEmbedding:
    """An m x m array of plane points, ``points[i][j]``.

    Construction does not validate; use :func:`verify_embedding` or
    :meth:`violations` for that, so malformed arrays can still be inspected.
    """

    points: tuple[tuple[Vec, ...], ...]
    leaper: Leaper

    def __post_init__(self) -> None:
        rows = tuple(tuple(as_vec(v) for v in row) for row in self.points)
        m = len(rows)
        if m == 0 or any(len(r) != m for r in rows):
            raise ValueError("embedding points must form a nonempty square array")
        object.__setattr__(self, "points", rows)

    @property
    def m(self) -> int:
        return len(self.points)

    def flat(self) -> list[Vec]:
        return [v for row in self.points for v in row]

    def edges(self) -> list[tuple[Vec, Vec]]:
        """Images of the grid edges, horizontal ones first."""
        P, m = self.points, self.m
        out = [(P[i][j], P[i][j + 1]) for i in range(m) for j in range(m - 1)]
        out += [(P[i][j], P[i + 1][j]) for i in range(m - 1) for j in range(m)]
        return out

    @property
    def box(self) -> Box:
        return Box.of(self.flat())

    def translate(self, t: Vec) -> "GridEmbedding":
        return GridEmbedding(tuple(tuple(add(v, t) for v in row) for row in self.points), self.leaper)

    def violations(self) -> list[str]:
        out = []
        flat = self.flat()
        if len(set(flat)) != len(flat):
            out.append("points not pairwise distinct")
        for a, b in self.edges():
            if not self.leaper.is_leap(sub(b, a)):
                out.append(f"grid edge {a} -> {b} is not a leap")
                break
        if rhombus_failure(self.points) is not None:
            out.append("rhombus identity fails")
        return out


def rhombus_failure(points: Sequence[Sequence[Vec]]) -> Optional[tuple[int, int]]:
    m = len(points)
    for i in range(m - 1):
        for j in range(m - 1):
            a, b = points[i][j], points[i + 1][j + 1]
            c, d = points[i][j + 1], points[i + 1][j]
            if add(a, b) != add(c, d):
                return i, j
    return None


@dataclass(frozen=True)
class VerificationReport:
    disjoint: bool
    box_ok: bool
    witness_overlap: Optional[Vec]
    sizes: tuple[int, int, int, int]
    min_n: int
    n: int

    @property
    def ok(self) -> bool:
        return self.disjoint and self.box_ok

    def problems(self) -> list[str]:
        a_x, a_y, b_x, b_y = self.sizes
        out = []
        if not self.disjoint:
            out.append(f"overlap: difference {self.witness_overlap} occurs in both paths")
        if a_x + b_x > self.n + 1:
            out.append(f"box: a_X+b_X = {a_x + b_x} > {self.n + 1}")
        if a_y + b_y > self.n + 1:
            out.append(f"box: a_Y+b_Y = {a_y + b_y} > {self.n + 1}")
        return out


def check_pair(alpha: LeaperPath, beta: LeaperPath, n: int) -> VerificationReport:
    """Test whether ``alpha x beta`` is an embedding of the m x m grid into the n x n board."""
    if len(alpha) != len(beta):
        raise LengthMismatch(f"paths have {len(alpha)} and {len(beta)} vertices")
    common = difference_set(alpha.vertices) & difference_set(beta.vertices)
    a_x, a_y = alpha.box.size
    b_x, b_y = beta.box.size
    min_n = max(a_x + b_x, a_y + b_y) - 1
    return VerificationReport(
        disjoint=not common,
        box_ok=min_n <= n,
        witness_overlap=min(common) if common else None,
        sizes=(a_x, a_y, b_x, b_y),
        min_n=min_n,
        n=n,
    )


def product(alpha: LeaperPath, beta: LeaperPath) -> GridEmbedding:
    if len(alpha) != len(beta):
        raise LengthMismatch(f"paths have {len(alpha)} and {len(beta)} vertices")
    common = difference_set(alpha.vertices) & difference_set(beta.vertices)
    if common:
        raise OverlapError(f"difference {min(common)} occurs in both paths")
    points = tuple(tuple(add(a, b) for b in beta.vertices) for a in alpha.vertices)
    return GridEmbedding(points, alpha.leaper)


def factor(embedding: GridEmbedding) -> tuple[LeaperPath, LeaperPath]:
    """Split an embedding into ``(alpha, beta)`` with ``alpha[0] == (0, 0)``."""
    P = embedding.points
    bad = rhombus_failure(P)
    if bad is not None:
        i, j = bad
        raise RhombusViolation(f"cells ({i},{j})..({i + 1},{j + 1}) do not form a rhombus")
    origin = P[0][0]
    alpha = LeaperPath(tuple(sub(P[i][0], origin) for i in range(embedding.m)), embedding.leaper)
    beta = LeaperPath(P[0], embedding.leaper)
    return alpha, beta


def verify_embedding(embedding: GridEmbedding, leaper: Leaper, n: int) -> bool:
    """Check an embedding directly: distinct points, fits an n x n box, edges are leaps.

    Deliberately avoids the path factorisation so it can cross-check it.
    """
    flat = embedding.flat()
    if len(set(flat)) != len(flat):
        return False
    xs = [v[0] for v in flat]
    ys = [v[1] for v in flat]
    if max(xs) - min(xs) >= n or max(ys) - min(ys) >= n:
        return False
    P, m = embedding.points, embedding.m
    for i in range(m):
        for j in range(m):
            x, y = P[i][j]
            for di, dj in ((1, 0), (0, 1)):
                if i + di < m and j + dj < m:
                    x2, y2 = P[i + di][j + dj]
                    dx, dy = abs(x2 - x), abs(y2 - y)
                    if {dx, dy} != {leaper.p, leaper.q}:
                        return False
    return True
