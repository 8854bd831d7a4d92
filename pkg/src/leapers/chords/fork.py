"""Certificate-producing run of the good-pair reduction.

A connected figure that realises ``a*u + b*v`` and ``c*u + d*v`` with
``abcd < 0`` must realise ``u`` or ``v``. :func:`fork_trace` replays the
constructive argument on a concrete figure: it repeatedly takes the convex
quadrilateral spanned by the current good pair, finds a realised side,
and either finishes (side parallel to ``u`` or ``v``) or swaps that side
into the pair. Coefficients are tracked in the ``(u, v)`` frame; every
realisation test happens on the plane vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from leapers.chords.figures import Figure, FigureLike, _cells, is_connected, realizes
from leapers.chords.forcing import chord_check
from leapers.core.vec import Vec, cross
from leapers.errors import ForcingCounterexample, IterationLimit, NotFork, PreconditionUnmet

SIDE_NAMES = ("AB", "BC", "CD", "DA")


@dataclass(frozen=True)
class Basis:
    u: Vec
    v: Vec

    def __post_init__(self) -> None:
        if cross(self.u, self.v) == 0:
            raise PreconditionUnmet(f"basis vectors {self.u} and {self.v} are parallel")

    def plane(self, coeffs: Vec) -> Vec:
        a, b = coeffs
        return (a * self.u[0] + b * self.v[0], a * self.u[1] + b * self.v[1])


@dataclass(frozen=True)
class GoodPair:
    """Coefficient vectors ``(x, y)`` and ``(-z, t)`` with x, y, z, t > 0."""

    x: int
    y: int
    z: int
    t: int

    def __post_init__(self) -> None:
        if min(self.x, self.y, self.z, self.t) <= 0:
            raise ValueError(f"good pair needs positive entries, got {self}")

    @property
    def first(self) -> Vec:
        return (self.x, self.y)

    @property
    def second(self) -> Vec:
        return (-self.z, self.t)

    @property
    def total(self) -> int:
        return self.x + self.y + self.z + self.t


def normalize_fork_input(u1: Vec, u2: Vec) -> GoodPair:
    (a, b), (c, d) = u1, u2
    if a * b * c * d >= 0:
        raise NotFork(f"{u1}, {u2}: need abcd < 0")
    if b < 0:
        a, b = -a, -b
    if d < 0:
        c, d = -c, -d
    if a < 0:
        (a, b), (c, d) = (c, d), (a, b)
    return GoodPair(a, b, -c, d)


def fork_quadrilateral(gp: GoodPair) -> dict[str, Vec]:
    """Side vectors A-B, B-C, C-D, D-A of the quadrilateral whose diagonals are the pair.

    The vertices themselves sit at half-integer points; the sides do not.
    """
    x, y, z, t = gp.x, gp.y, gp.z, gp.t
    w = min(x, z)
    return {
        "AB": (-w, 0),
        "BC": (w - x, -y),
        "CD": (x + z - w, y - t),
        "DA": (w - z, t),
    }


def _upward(s: Vec) -> Vec:
    return s if s[1] > 0 else (-s[0], -s[1])


@dataclass(frozen=True)
class ForkStep:
    pair: GoodPair
    sides: dict
    realized: tuple[str, ...]
    chosen: str
    plane_side: Vec
    witness: tuple[Vec, Vec]
    regular: Optional[bool]  # None on the final step, which replaces nothing


@dataclass(frozen=True)
class Conclusion:
    target: str  # "u" or "v"
    vector: Vec
    multiple: int
    witness: tuple[Vec, Vec]


@dataclass(frozen=True)
class ForkCertificate:
    figure: frozenset
    basis: Basis
    inputs: tuple[Vec, Vec]
    steps: tuple[ForkStep, ...]
    conclusion: Conclusion

    @property
    def irregular_steps(self) -> int:
        return sum(1 for s in self.steps if s.regular is False)


def _is_regular(old: GoodPair, new: GoodPair) -> bool:
    a = (old.x, old.y, old.z, old.t)
    b = (new.x, new.y, new.z, new.t)
    return all(p >= q for p, q in zip(a, b)) and sum(p > q for p, q in zip(a, b)) == 1


def fork_trace(figure: FigureLike, basis: Basis, u1: Vec, u2: Vec) -> ForkCertificate:
    cells = _cells(figure)
    if not is_connected(cells):
        raise PreconditionUnmet("figure is not connected")
    gp = normalize_fork_input(u1, u2)
    for coeffs in (u1, u2):
        if realizes(cells, basis.plane(coeffs)) is None:
            raise PreconditionUnmet(f"figure does not realise {basis.plane(coeffs)}")

    limit = 4 * gp.total
    steps: list[ForkStep] = []
    for _ in range(limit):
        sides = fork_quadrilateral(gp)
        found = {}
        for name in SIDE_NAMES:
            w = realizes(cells, basis.plane(sides[name]))
            if w is not None:
                found[name] = w
        if not found:
            raise ForcingCounterexample(f"no side of the quadrilateral for {gp} is realised")

        axis = [nm for nm in found if 0 in sides[nm]]
        if axis:
            name = axis[0]
            sx, sy = sides[name]
            target, unit, mult = ("u", basis.u, abs(sx)) if sy == 0 else ("v", basis.v, abs(sy))
            steps.append(ForkStep(gp, sides, tuple(found), name, basis.plane(sides[name]),
                                  found[name], None))
            if not chord_check(cells, unit, mult):
                raise ForcingCounterexample(f"{mult}*{unit} realised but {unit} is not")
            return ForkCertificate(Figure(cells), basis, (u1, u2), tuple(steps),
                                   Conclusion(target, unit, mult, realizes(cells, unit)))

        name = min(found, key=lambda nm: _upward(sides[nm]))
        sx, sy = _upward(sides[name])
        if sx > 0:
            new = GoodPair(sx, sy, gp.z, gp.t)
        else:
            new = GoodPair(gp.x, gp.y, -sx, sy)
        steps.append(ForkStep(gp, sides, tuple(found), name, basis.plane(sides[name]),
                              found[name], _is_regular(gp, new)))
        gp = new
    raise IterationLimit(f"no conclusion after {limit} iterations")
