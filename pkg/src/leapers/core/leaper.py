"""Leaper pieces and their classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd

from leapers.core.vec import Vec
from leapers.errors import WrongLeaperClass


class LeaperClass(enum.Enum):
    NONSKEW = "nonskew"
    REDUCIBLE = "reducible"
    FREE = "free"
    HALFFREE = "halffree"


NAMES = {
    (1, 2): "knight",
    (1, 3): "camel",
    (1, 4): "giraffe",
    (2, 3): "zebra",
}


@dataclass(frozen=True)
class Leaper:
    """The (p, q)-leaper. ``kind`` and ``d`` are derived on construction."""

    p: int
    q: int
    kind: LeaperClass = field(init=False, compare=False)
    d: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError(f"leaper offsets must be nonnegative, got ({self.p}, {self.q})")
        d = gcd(self.p, self.q)
        if self.p == 0 or self.q == 0 or self.p == self.q:
            kind = LeaperClass.NONSKEW
        elif d >= 2:
            kind = LeaperClass.REDUCIBLE
        elif (self.p + self.q) % 2 == 1:
            kind = LeaperClass.FREE
        else:
            kind = LeaperClass.HALFFREE
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "d", d)

    @property
    def name(self) -> str:
        return NAMES.get(tuple(sorted((self.p, self.q))), f"({self.p},{self.q})-leaper")

    @property
    def moves(self) -> tuple[Vec, ...]:
        """The eight leap vectors (fewer for non-skew pieces)."""
        p, q = self.p, self.q
        out = []
        for a, b in ((p, q), (q, p)):
            for sa in (1, -1):
                for sb in (1, -1):
                    v = (sa * a, sb * b)
                    if v not in out:
                        out.append(v)
        return tuple(out)

    def is_leap(self, v: Vec) -> bool:
        ax, ay = abs(v[0]), abs(v[1])
        return (ax == self.p and ay == self.q) or (ax == self.q and ay == self.p)

    def swapped(self) -> "Leaper":
        return Leaper(self.q, self.p)

    def require(self, *kinds: LeaperClass) -> None:
        if self.kind not in kinds:
            wanted = " or ".join(k.value for k in kinds)
            raise WrongLeaperClass(f"{self} is {self.describe()}, expected {wanted}")

    def describe(self) -> str:
        if self.kind is LeaperClass.REDUCIBLE:
            return f"reducible (d={self.d})"
        return self.kind.value

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


def classify(p: int, q: int) -> Leaper:
    return Leaper(p, q)


def reduce(p: int, q: int, n: int) -> tuple[int, int, int]:
    """Map a reducible (p, q) problem of order n to its coprime equivalent."""
    leaper = Leaper(p, q)
    leaper.require(LeaperClass.REDUCIBLE)
    d = leaper.d
    return p // d, q // d, -(-n // d)
