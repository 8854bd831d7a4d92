"""Exact search for the largest grid that embeds into a small leaper board.

The search runs over path pairs. By the factorisation, the m x m grid
embeds into the n x n board exactly when there are two m-vertex leaper
paths with disjoint difference sets whose bounding boxes satisfy
``a_X + b_X <= n + 1`` and ``a_Y + b_Y <= n + 1``.

Symmetry reduction: the eight symmetries of the square permute the eight
leap directions simply transitively, and both conditions are invariant
when one symmetry is applied to both paths. So every pair is equivalent
to one whose first path starts with the leap ``(p, q)``. Walks that are
reversals of one another describe the same path and only one is kept.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from leapers.core.embedding import check_pair, product, verify_embedding
from leapers.core.leaper import Leaper
from leapers.core.paths import LeaperPath
from leapers.core.vec import Vec
from leapers.errors import BudgetExceeded

SYMMETRIES = [
    (1, 0, 0, 1), (0, -1, 1, 0), (-1, 0, 0, -1), (0, 1, -1, 0),
    (1, 0, 0, -1), (-1, 0, 0, 1), (0, 1, 1, 0), (0, -1, -1, 0),
]


def _apply(g, v: Vec) -> Vec:
    a, b, c, d = g
    return (a * v[0] + b * v[1], c * v[0] + d * v[1])


@dataclass(frozen=True)
class SearchLimits:
    max_nodes: int = 10_000_000
    max_m: int = 64
    time_budget: float = 120.0

    def __post_init__(self) -> None:
        if self.max_nodes <= 0 or self.max_m <= 0 or self.time_budget <= 0:
            raise ValueError("search limits must be positive")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of :func:`max_grid_exact`.

    When ``exhausted`` is True, ``m_star`` is exact and equals ``m_upper``.
    Otherwise the true value lies in ``[m_star, m_upper]``.
    """

    leaper: Leaper
    n: int
    m_star: int
    m_upper: int
    exhausted: bool
    witness: Optional[tuple[LeaperPath, LeaperPath]] = None
    nodes: int = 0
    seconds: float = field(default=0.0, compare=False)


class _OutOfBudget(Exception):
    pass


class _Searcher:
    def __init__(self, leaper: Leaper, n: int, limits: SearchLimits):
        self.leaper = leaper
        self.n = n
        self.limits = limits
        self.moves = leaper.moves
        self.nodes = 0
        self.deadline = time.monotonic() + limits.time_budget

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limits.max_nodes:
            raise _OutOfBudget
        if not self.nodes & 0xFFF and time.monotonic() > self.deadline:
            raise _OutOfBudget

    def _canonical_moves(self, moves: list[Vec]) -> tuple:
        """Move sequence of the reversed walk, rotated so it starts with (p, q)."""
        rev = [(-x, -y) for x, y in reversed(moves)]
        first = (self.leaper.p, self.leaper.q)
        for g in SYMMETRIES:
            if _apply(g, rev[0]) == first:
                return tuple(_apply(g, v) for v in rev)
        raise AssertionError("no symmetry maps the reversed walk")

    def feasible(self, m: int) -> Optional[tuple[list[Vec], list[Vec]]]:
        """Return some valid pair with m vertices each, or None."""
        n = self.n
        p, q = self.leaper.p, self.leaper.q
        moves = self.moves
        lo = min(p, q)
        verts = [(0, 0), (p, q)]
        vset = set(verts)
        diffs = {(p, q), (-p, -q)}
        found: list = []

        def beta_budget():
            """Smallest box a one-leap beta could have, given alpha's differences."""
            allowed = [mv for mv in moves if mv not in diffs]
            if not allowed:
                return None
            return (min(abs(x) for x, _ in allowed) + 1, min(abs(y) for _, y in allowed) + 1,
                    min(abs(x) + abs(y) for x, y in allowed) + 2)

        def grow_alpha(x0, x1, y0, y1):
            self._tick()
            bb = beta_budget()
            if bb is None:
                return False
            ax, ay = x1 - x0 + 1, y1 - y0 + 1
            if ax + bb[0] > n + 1 or ay + bb[1] > n + 1 or ax + ay + bb[2] > 2 * n + 2:
                return False
            if len(verts) == m:
                mv = [(b[0] - a[0], b[1] - a[1]) for a, b in zip(verts, verts[1:])]
                if tuple(mv) > self._canonical_moves(mv):
                    return False
                beta = self._search_beta(m, diffs, n + 1 - ax, n + 1 - ay)
                if beta is not None:
                    found.append((list(verts), beta))
                    return True
                return False
            cx, cy = verts[-1]
            for dx, dy in moves:
                nv = (cx + dx, cy + dy)
                if nv in vset:
                    continue
                nx0, nx1 = min(x0, nv[0]), max(x1, nv[0])
                ny0, ny1 = min(y0, nv[1]), max(y1, nv[1])
                if nx1 - nx0 + 1 > n - lo or ny1 - ny0 + 1 > n - lo:
                    continue
                added = []
                for o in verts:
                    d = (nv[0] - o[0], nv[1] - o[1])
                    if d not in diffs:
                        diffs.add(d)
                        diffs.add((-d[0], -d[1]))
                        added.append(d)
                verts.append(nv)
                vset.add(nv)
                ok = grow_alpha(nx0, nx1, ny0, ny1)
                verts.pop()
                vset.discard(nv)
                for d in added:
                    diffs.discard(d)
                    diffs.discard((-d[0], -d[1]))
                if ok:
                    return True
            return False

        x0, x1 = min(0, p), max(0, p)
        y0, y1 = min(0, q), max(0, q)
        if x1 - x0 + 1 > n - lo or y1 - y0 + 1 > n - lo:
            return None
        grow_alpha(x0, x1, y0, y1)
        return found[0] if found else None

    def _search_beta(self, m: int, forbidden: set, bx: int, by: int) -> Optional[list[Vec]]:
        moves = [mv for mv in self.moves if mv not in forbidden]
        verts = [(0, 0)]
        vset = {(0, 0)}

        def grow(x0, x1, y0, y1):
            self._tick()
            if len(verts) == m:
                return True
            cx, cy = verts[-1]
            for dx, dy in moves:
                nv = (cx + dx, cy + dy)
                if nv in vset:
                    continue
                nx0, nx1 = min(x0, nv[0]), max(x1, nv[0])
                ny0, ny1 = min(y0, nv[1]), max(y1, nv[1])
                if nx1 - nx0 >= bx or ny1 - ny0 >= by:
                    continue
                if any((nv[0] - o[0], nv[1] - o[1]) in forbidden for o in verts):
                    continue
                verts.append(nv)
                vset.add(nv)
                if grow(nx0, nx1, ny0, ny1):
                    return True
                verts.pop()
                vset.discard(nv)
            return False

        return list(verts) if grow(0, 0, 0, 0) else None


def max_grid_exact(leaper: Leaper, n: int, limits: Optional[SearchLimits] = None) -> SearchResult:
    """Largest m such that the m x m grid embeds into the n x n board of ``leaper``."""
    if n < 1:
        raise ValueError("n must be positive")
    limits = limits or SearchLimits()
    t0 = time.monotonic()
    s = _Searcher(leaper, n, limits)
    origin = LeaperPath(((0, 0),), leaper)
    best, witness = 1, (origin, origin)
    # m^2 distinct points on n^2 squares
    cap = min(n, limits.max_m)
    m = 2
    while m <= cap:
        try:
            pair = s.feasible(m)
        except _OutOfBudget:
            return SearchResult(leaper, n, best, n, False, witness, s.nodes, time.monotonic() - t0)
        if pair is None:
            return SearchResult(leaper, n, best, best, True, witness, s.nodes, time.monotonic() - t0)
        best = m
        witness = (LeaperPath(tuple(pair[0]), leaper), LeaperPath(tuple(pair[1]), leaper))
        m += 1
    exhausted = cap == n
    return SearchResult(leaper, n, best, best if exhausted else n, exhausted, witness, s.nodes,
                        time.monotonic() - t0)


def no_perfect_embedding(leaper: Leaper, n: int, limits: Optional[SearchLimits] = None) -> bool:
    if n < 2:
        raise ValueError("n must be at least 2")
    res = max_grid_exact(leaper, n, limits)
    if not res.exhausted:
        raise BudgetExceeded(f"search for n={n} ran out of budget after {res.nodes} nodes")
    return res.m_star < n


def search_table(leaper: Leaper, n_max: int, limits: Optional[SearchLimits] = None) -> list[SearchResult]:
    return [max_grid_exact(leaper, n, limits) for n in range(1, n_max + 1)]


def witness_verifies(res: SearchResult) -> bool:
    """Re-check a search witness with both the pair criterion and the direct checker."""
    if res.witness is None:
        return False
    alpha, beta = res.witness
    if len(alpha) != res.m_star or not check_pair(alpha, beta, res.n).ok:
        return False
    return verify_embedding(product(alpha, beta), res.leaper, res.n)


def max_grid_bruteforce(leaper: Leaper, n: int, max_m: int = 3) -> int:
    """Largest ``m <= max_m`` with an embedding found by placing grid vertices directly on the board.

    Independent of the path-pair machinery: backtracks over board squares
    for each grid vertex in row-major order, checking only leap adjacency
    and injectivity.
    """
    board = [(x, y) for x in range(1, n + 1) for y in range(1, n + 1)]

    def leap(a, b):
        dx, dy = abs(a[0] - b[0]), abs(a[1] - b[1])
        return (dx, dy) == (leaper.p, leaper.q) or (dx, dy) == (leaper.q, leaper.p)

    def embeds(m: int) -> bool:
        grid = {}
        used = set()
        cells = [(i, j) for i in range(m) for j in range(m)]

        def place(k: int) -> bool:
            if k == len(cells):
                return True
            i, j = cells[k]
            for pt in board:
                if pt in used:
                    continue
                if j > 0 and not leap(pt, grid[(i, j - 1)]):
                    continue
                if i > 0 and not leap(pt, grid[(i - 1, j)]):
                    continue
                grid[(i, j)] = pt
                used.add(pt)
                if place(k + 1):
                    return True
                used.discard(pt)
                del grid[(i, j)]
            return False

        return place(0)

    best = 0
    for m in range(1, max_m + 1):
        if not embeds(m):
            break
        best = m
    return best
