"""Two-dimensional integer lattices in Hermite normal form."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from leapers.core.vec import Vec, cross
from leapers.errors import NotSublattice


@dataclass(frozen=True)
class LatticeBasis:
    b1: Vec
    b2: Vec

    def __post_init__(self) -> None:
        if cross(self.b1, self.b2) == 0:
            raise ValueError(f"degenerate lattice basis {self.b1}, {self.b2}")

    @property
    def det(self) -> int:
        return cross(self.b1, self.b2)

    @property
    def area(self) -> int:
        return abs(self.det)

    def __contains__(self, v: Vec) -> bool:
        d = self.det
        return cross(v, self.b2) % d == 0 and cross(self.b1, v) % d == 0

    def canonical(self) -> "LatticeBasis":
        return hermite_form([self.b1, self.b2])

    def same_lattice(self, other: "LatticeBasis") -> bool:
        return self.canonical() == other.canonical()


def hermite_form(vectors: Iterable[Vec]) -> LatticeBasis:
    """Canonical basis ``((a, 0), (b, c))`` with ``a, c > 0`` and ``0 <= b < a``.

    ``vectors`` may be any generating set of a full-rank lattice.
    """
    vs = [list(v) for v in vectors if v != (0, 0)]
    while sum(1 for v in vs if v[1]) > 1:
        live = sorted((v for v in vs if v[1]), key=lambda v: abs(v[1]))
        piv = live[0]
        for v in live[1:]:
            k = v[1] // piv[1]
            v[0] -= k * piv[0]
            v[1] -= k * piv[1]
    rows = [v for v in vs if v[1]]
    if not rows:
        raise ValueError("vectors do not span the plane")
    b, c = rows[0]
    if c < 0:
        b, c = -b, -c
    a = 0
    for v in vs:
        if not v[1]:
            a = gcd(a, v[0])
    if a == 0:
        raise ValueError("vectors do not span the plane")
    return LatticeBasis((a, 0), (b % a, c))


def integer_kernel(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """A basis of ``{z in Z^c : M z = 0}`` via unimodular column operations."""
    M = [list(r) for r in rows]
    ncols = len(M[0])
    U = [[int(i == j) for j in range(ncols)] for i in range(ncols)]  # columns of U track ops
    free = list(range(ncols))

    def colop(dst: int, src: int, k: int) -> None:
        # column dst -= k * column src
        for r in M:
            r[dst] -= k * r[src]
        for r in U:
            r[dst] -= k * r[src]

    for row in M:
        while True:
            live = [j for j in free if row[j]]
            if len(live) <= 1:
                break
            piv = min(live, key=lambda j: abs(row[j]))
            for j in live:
                if j != piv:
                    colop(j, piv, row[j] // row[piv])
        live = [j for j in free if row[j]]
        if live:
            free.remove(live[0])
    return [[U[i][j] for i in range(ncols)] for j in free]


def lattice_intersection(A: LatticeBasis, B: LatticeBasis) -> LatticeBasis:
    """Canonical basis of the intersection of two full-rank lattices."""
    # A s = B t  <=>  [a1 a2 -b1 -b2] (s, t) = 0
    M = [
        [A.b1[0], A.b2[0], -B.b1[0], -B.b2[0]],
        [A.b1[1], A.b2[1], -B.b1[1], -B.b2[1]],
    ]
    gens = []
    for z in integer_kernel(M):
        s1, s2 = z[0], z[1]
        gens.append((s1 * A.b1[0] + s2 * A.b2[0], s1 * A.b1[1] + s2 * A.b2[1]))
    return hermite_form(gens)


def diagonal_lattice(h: int) -> LatticeBasis:
    """The lattice spanned by ``(h, h)`` and ``(-h, h)``."""
    return LatticeBasis((h, h), (-h, h))


def lattice_index(A: LatticeBasis, H: LatticeBasis) -> int:
    """Index of the sublattice ``H`` in ``A``."""
    if H.b1 not in A or H.b2 not in A:
        raise NotSublattice(f"{H} is not contained in {A}")
    return H.area // A.area


def partition_count_check(A: LatticeBasis, h: int) -> bool:
    """True iff ``A`` splits into exactly ``h`` translates of the diagonal lattice for ``h``."""
    return lattice_index(A, diagonal_lattice(h)) == h
