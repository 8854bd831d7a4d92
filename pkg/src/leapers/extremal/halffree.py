"""Slope splits, lattice data and covering counts for half-free path pairs."""

from __future__ import annotations

import enum
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from leapers.core.leaper import Leaper
from leapers.core.paths import LeaperPath, difference_set
from leapers.core.vec import Vec, cross, neg
from leapers.errors import SharedSlope
from leapers.extremal.lattice import LatticeBasis


def direction_classes(leaper: Leaper) -> tuple[Vec, ...]:
    """One representative per leap slope: (p,q), (q,p), (-p,q), (-q,p)."""
    p, q = leaper.p, leaper.q
    return ((p, q), (q, p), (-p, q), (-q, p))


def class_of(move: Vec, leaper: Leaper) -> Vec:
    reps = direction_classes(leaper)
    if move in reps:
        return move
    if neg(move) in reps:
        return neg(move)
    raise ValueError(f"{move} is not a {leaper} leap")


@dataclass(frozen=True)
class SlopeSplit:
    leaper: Leaper
    alpha: tuple[Vec, ...]
    beta: tuple[Vec, ...]

    @property
    def single_slope(self) -> bool:
        return len(self.alpha) == 1 or len(self.beta) == 1

    @property
    def unused(self) -> tuple[Vec, ...]:
        return tuple(c for c in direction_classes(self.leaper) if c not in self.alpha + self.beta)

    @property
    def two_two(self) -> bool:
        return len(self.alpha) == 2 and len(self.beta) == 2


def _classes_used(path: LeaperPath) -> tuple[Vec, ...]:
    used = {class_of(mv, path.leaper) for mv in path.moves}
    return tuple(c for c in direction_classes(path.leaper) if c in used)


def slope_split(alpha: LeaperPath, beta: LeaperPath) -> SlopeSplit:
    a, b = _classes_used(alpha), _classes_used(beta)
    shared = set(a) & set(b)
    if shared:
        raise SharedSlope(f"both paths leap along {sorted(shared)}")
    return SlopeSplit(alpha.leaper, a, b)


def all_splits(leaper: Leaper) -> list[SlopeSplit]:
    """The three ways to share the four slopes two and two."""
    c = direction_classes(leaper)
    out = []
    for other in (1, 2, 3):
        a = (c[0], c[other])
        b = tuple(x for x in c if x not in a)
        out.append(SlopeSplit(leaper, a, b))
    return out


def split_lattices(split: SlopeSplit) -> tuple[LatticeBasis, LatticeBasis]:
    if not split.two_two:
        raise ValueError("need a two-and-two slope split")
    return LatticeBasis(*split.alpha), LatticeBasis(*split.beta)


def fundamental_area(split: SlopeSplit) -> tuple[int, int]:
    """Return ``(s, h)``: the common covolume of both split lattices and ``s // 2``."""
    A, B = split_lattices(split)
    if A.area != B.area:
        raise ValueError(f"split lattices have different areas {A.area} and {B.area}")
    s = A.area
    if s % 2:
        raise ValueError(f"area {s} is odd; h is only integral for half-free leapers")
    return s, s // 2


class Multiplicity(tuple):
    """``(diagonal_plus, diagonal_minus, zigzag_vertical, zigzag_horizontal)``."""

    __slots__ = ()
    _fields = ("diagonal_plus", "diagonal_minus", "zigzag_vertical", "zigzag_horizontal")

    def __new__(cls, dp: int, dm: int, zv: int, zh: int):
        return super().__new__(cls, (dp, dm, zv, zh))

    def as_dict(self) -> dict:
        return dict(zip(self._fields, self))

    diagonal_plus = property(lambda self: self[0])
    diagonal_minus = property(lambda self: self[1])
    zigzag_vertical = property(lambda self: self[2])
    zigzag_horizontal = property(lambda self: self[3])


def _max_window(values: list[int]) -> int:
    """Most values falling in a window ``{k, k + 1}``."""
    c = Counter(values)
    return max(c[k] + c.get(k + 1, 0) for k in c)


def multiplicity_diagnostics(path: LeaperPath, h: int) -> Multiplicity:
    """Largest vertex subsets of ``path`` on one diagonal or one zigzag of spacing h."""
    verts = path.vertices
    dp = Counter((x - y, x % h) for x, y in verts)
    dm = Counter((x + y, x % h) for x, y in verts)
    cosets = defaultdict(list)
    for x, y in verts:
        cosets[(x % h, y % h, (x // h + y // h) % 2)].append((x // h, y // h))
    zv = max(_max_window([a for a, _ in pts]) for pts in cosets.values())
    zh = max(_max_window([b for _, b in pts]) for pts in cosets.values())
    return Multiplicity(max(dp.values()), max(dm.values()), zv, zh)


class Case(enum.Enum):
    SINGLE_SLOPE = "SingleSlope"
    CASE1 = "Case1"
    CASE2 = "Case2"


@dataclass(frozen=True)
class HalfFreeDiagnostic:
    split: SlopeSplit
    case: Case
    m: int
    n: int
    sizes: tuple[int, int, int, int]
    s: Optional[int] = None
    h: Optional[int] = None
    realized_hI_alpha: Optional[bool] = None
    realized_hII_alpha: Optional[bool] = None
    realized_hI_beta: Optional[bool] = None
    realized_hII_beta: Optional[bool] = None
    alpha_multiplicity: Optional[Multiplicity] = None
    beta_multiplicity: Optional[Multiplicity] = None

    @property
    def slack(self) -> Fraction:
        """``m - n/2``."""
        return Fraction(self.m) - Fraction(self.n, 2)


def halffree_bound_report(alpha: LeaperPath, beta: LeaperPath, n: int) -> HalfFreeDiagnostic:
    split = slope_split(alpha, beta)
    sizes = alpha.box.size + beta.box.size
    m = len(alpha)
    if not split.two_two:
        return HalfFreeDiagnostic(split, Case.SINGLE_SLOPE, m, n, sizes)
    s, h = fundamental_area(split)
    hI, hII = (h, h), (-h, h)
    da, db = difference_set(alpha.vertices), difference_set(beta.vertices)
    aI, aII, bI, bII = hI in da, hII in da, hI in db, hII in db
    case = Case.CASE2 if not (aI or aII) or not (bI or bII) else Case.CASE1
    return HalfFreeDiagnostic(
        split, case, m, n, sizes, s, h, aI, aII, bI, bII,
        multiplicity_diagnostics(alpha, h), multiplicity_diagnostics(beta, h),
    )
