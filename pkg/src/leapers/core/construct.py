"""Explicit path-pair constructions for free and half-free leapers."""

from __future__ import annotations

from dataclasses import dataclass

from leapers.core.embedding import GridEmbedding, product
from leapers.core.leaper import Leaper, LeaperClass
from leapers.core.paths import LeaperPath, path_from_moves, rotate90
from leapers.core.vec import ORIGIN, Vec
from leapers.errors import BoardTooSmall


@dataclass(frozen=True)
class Construction:
    """A path pair whose product embeds the m x m grid into the n x n board.

    ``p`` and ``q`` are the offsets actually used to build the move
    sequence; ``swapped`` records whether they were exchanged relative to
    the leaper the caller passed in.
    """

    alpha: LeaperPath
    beta: LeaperPath
    m: int
    n: int
    k: int
    p: int
    q: int
    swapped: bool
    variant: str

    def embedding(self) -> GridEmbedding:
        """The product, translated onto the board ``[n]^2``."""
        emb = product(self.alpha, self.beta)
        box = emb.box
        return emb.translate((1 - box.x_min, 1 - box.y_min))


def free_moves(p: int, q: int, k: int) -> list[Vec]:
    block = [(p, q), (-p, q)] * (p - 1) + [(p, q), (p, q)]
    block += [(p, -q), (-p, -q)] * (p - 1) + [(p, -q), (p, -q)]
    return block * k


def halffree_moves(p: int, q: int, k: int) -> list[Vec]:
    block = [(p, q), (-p, q)] * ((p - 3) // 2) + [(p, q), (p, q)]
    block += [(p, -q), (-p, -q)] * ((p - 1) // 2) + [(p, -q), (p, q)]
    return block * k


def free_construction(leaper: Leaper, k: int) -> Construction:
    leaper.require(LeaperClass.FREE)
    if k < 1:
        raise ValueError("k must be positive")
    p, q = leaper.p, leaper.q
    swapped = p % 2 == 0
    if swapped:
        p, q = q, p
    alpha = path_from_moves(ORIGIN, free_moves(p, q, k), leaper)
    return Construction(alpha, rotate90(alpha), 4 * k * p + 1, 4 * k * p + 2 * p * q + 1,
                        k, p, q, swapped, "free")


def halffree_construction(leaper: Leaper, k: int) -> Construction:
    leaper.require(LeaperClass.HALFFREE)
    if k < 1:
        raise ValueError("k must be positive")
    p, q = leaper.p, leaper.q
    swapped = p < 3
    if swapped:
        p, q = q, p
    alpha = path_from_moves(ORIGIN, halffree_moves(p, q, k), leaper)
    return Construction(alpha, rotate90(alpha), 2 * k * p + 1, 4 * k * p + p * q + 1,
                        k, p, q, swapped, "halffree")


def derived_free_leaper(leaper: Leaper) -> Leaper:
    """The free leaper whose image under :func:`phi` is ``leaper``."""
    leaper.require(LeaperClass.HALFFREE)
    return Leaper(abs(leaper.p - leaper.q) // 2, (leaper.p + leaper.q) // 2)


def phi(v: Vec) -> Vec:
    """Rotate by 45 degrees and scale by sqrt(2): ``(x, y) -> (x - y, x + y)``."""
    return (v[0] - v[1], v[0] + v[1])


@dataclass(frozen=True)
class PhiEmbedding:
    embedding: GridEmbedding
    source: Construction
    n: int

    @property
    def m(self) -> int:
        return self.embedding.m


def _phi_image(c: Construction, leaper: Leaper) -> GridEmbedding:
    pts = product(c.alpha, c.beta).points
    return GridEmbedding(tuple(tuple(phi(v) for v in row) for row in pts), leaper)


def phi_embed(leaper: Leaper, n: int) -> PhiEmbedding:
    """Embed a grid into the n x n board of a half-free leaper via its free partner.

    Uses the largest k whose mapped product still fits in ``[n]^2`` and
    centres the result on the board.
    """
    free = derived_free_leaper(leaper)
    best = None
    k = 1
    while True:
        c = free_construction(free, k)
        img = _phi_image(c, leaper)
        sx, sy = img.box.size
        if sx > n or sy > n:
            break
        best = (c, img)
        k += 1
    if best is None:
        raise BoardTooSmall(f"no phi-embedding of {leaper} fits on a {n}x{n} board")
    c, img = best
    box = img.box
    off_x = 1 + (n - box.size_x) // 2 - box.x_min
    off_y = 1 + (n - box.size_y) // 2 - box.y_min
    return PhiEmbedding(img.translate((off_x, off_y)), c, n)
