"""Exhaustive and seeded-random harnesses for the forcing results.

Each suite returns a :class:`SuiteReport`; a nonempty ``counterexamples``
list means this package is wrong, not the theorems.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd

from leapers.chords.figures import Figure, random_figure, random_snake, realized_set, realizes
from leapers.chords.fork import Basis, fork_trace
from leapers.chords.forcing import chord_check, is_strictly_convex, quad_check
from leapers.chords.polyomino import fixed_polyominoes
from leapers.core.paths import Box
from leapers.core.vec import Vec, cross
from leapers.errors import ForcingCounterexample, IterationLimit


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    counterexamples: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def summary(self) -> str:
        return f"{self.name}: {self.cases} cases, {len(self.counterexamples)} counterexamples"


def chord_suite(max_cells: int = 8, max_n: int = 4) -> SuiteReport:
    """Every fixed polyomino up to ``max_cells`` and every realised ``n*v`` with ``2 <= n <= max_n``."""
    report = SuiteReport("chord-suite")
    for fig in fixed_polyominoes(max_cells):
        diffs = realized_set(fig)
        for w in diffs:
            g = gcd(*w)
            for n in range(2, max_n + 1):
                if g % n:
                    continue
                v = (w[0] // n, w[1] // n)
                report.cases += 1
                if not chord_check(fig, v, n):
                    report.counterexamples.append({"figure": sorted(fig), "v": v, "n": n})
    return report


def random_chord_suite(cases: int = 10_000, seed: int = 0, max_size: int = 60,
                       max_n: int = 5) -> SuiteReport:
    """Random blobs and snakes, each tested on one realised multiple ``n*v``."""
    rng = random.Random(seed)
    report = SuiteReport("random-chord-suite")
    while report.cases < cases:
        size = rng.randint(2, max_size)
        if rng.random() < 0.5:
            fig = random_figure(rng.getrandbits(32), size, Box(0, 15, 0, 15))
        else:
            fig = random_snake(rng.getrandbits(32), size)
        n = rng.randint(2, max_n)
        multiples = sorted(w for w in realized_set(fig) if gcd(*w) % n == 0)
        if not multiples:
            continue
        w = rng.choice(multiples)
        v = (w[0] // n, w[1] // n)
        report.cases += 1
        if not chord_check(fig, v, n):
            report.counterexamples.append({"figure": sorted(fig), "v": v, "n": n})
    return report


def _points_inside(d1: Vec, d2: Vec) -> list[Vec]:
    """Integer points ``-s*d1 + r*d2`` with ``0 < s, r < 1``."""
    corners = [(0, 0), (-d1[0], -d1[1]), (d2[0], d2[1]), (d2[0] - d1[0], d2[1] - d1[1])]
    xs = [c[0] for c in corners]
    ys = [c[1] for c in corners]
    det = cross(d2, d1)
    sign = 1 if det > 0 else -1
    det *= sign
    out = []
    for x in range(min(xs) + 1, max(xs)):
        for y in range(min(ys) + 1, max(ys)):
            r = sign * cross((x, y), d1)
            s = -sign * cross(d2, (x, y))
            if 0 < r < det and 0 < s < det:
                out.append((x, y))
    return out


def random_quad_case(rng: random.Random, max_size: int = 40):
    """Draw (figure, A, B, C, D) with ABCD strictly convex and both diagonals realised."""
    while True:
        size = rng.randint(2, max_size)
        fig = random_figure(rng.getrandbits(32), size, Box(0, 11, 0, 11))
        diffs = sorted(realized_set(fig))
        if len(diffs) < 2:
            continue
        d1, d2 = rng.sample(diffs, 2)
        if cross(d1, d2) == 0:
            continue
        inside = _points_inside(d1, d2)
        if not inside:
            continue
        A = (0, 0)
        C = (-d1[0], -d1[1])
        B = rng.choice(inside)
        D = (B[0] - d2[0], B[1] - d2[1])
        if rng.random() < 0.5:  # exercise both orientations
            B, D = D, B
        if is_strictly_convex(A, B, C, D):
            return fig, A, B, C, D


def quad_suite(cases: int = 10_000, seed: int = 0) -> SuiteReport:
    rng = random.Random(seed)
    report = SuiteReport("quad-suite")
    for _ in range(cases):
        fig, A, B, C, D = random_quad_case(rng)
        report.cases += 1
        if quad_check(fig, A, B, C, D) is None:
            report.counterexamples.append({"figure": sorted(fig), "quad": [A, B, C, D]})
    return report


def random_fork_case(rng: random.Random, max_coeff: int = 4, max_size: int = 40):
    """Draw (figure, basis, u1, u2) meeting every precondition of :func:`fork_trace`."""
    small = [(x, y) for x in range(-2, 3) for y in range(-2, 3) if (x, y) != (0, 0)]
    while True:
        u, v = rng.sample(small, 2)
        if cross(u, v) == 0:
            continue
        basis = Basis(u, v)
        size = rng.randint(2, max_size)
        fig = random_figure(rng.getrandbits(32), size, Box(0, 11, 0, 11))
        diffs = realized_set(fig)
        pos, neg = [], []
        for a in range(-max_coeff, max_coeff + 1):
            for b in range(-max_coeff, max_coeff + 1):
                if a and b and basis.plane((a, b)) in diffs:
                    (pos if a * b > 0 else neg).append((a, b))
        if pos and neg:
            u1, u2 = rng.choice(pos), rng.choice(neg)
            if rng.random() < 0.5:
                u1, u2 = u2, u1
            return fig, basis, u1, u2


def random_deep_fork_case(rng: random.Random, max_size: int = 80):
    """Draw a unit-basis fork input whose first quadrilateral has no realised axis side.

    Such inputs are rare among small coefficients; these force at least
    one replacement step and regularly an irregular one.
    """
    basis = Basis((1, 0), (0, 1))
    while True:
        fig = random_snake(rng.getrandbits(32), rng.randint(10, max_size))
        diffs = realized_set(fig)
        pos = sorted(d for d in diffs if d[0] > 0 and d[1] > 0)
        negs = sorted(d for d in diffs if d[0] < 0 and d[1] > 0)
        if not pos or not negs:
            continue
        horiz = {d[0] for d in diffs if d[1] == 0}
        vert = {d[1] for d in diffs if d[0] == 0}
        valid = []
        # w = min(x, z) must avoid horizontal distances; the side beside the
        # shorter first coordinate must avoid vertical ones.
        for x, y in pos:
            if x in horiz or y in vert:
                continue
            for c, t in negs:
                z = -c
                if z > x or (z == x and t not in vert):
                    if y != t or z not in horiz:
                        valid.append(((x, y), (c, t)))
        for c, t in negs:
            z = -c
            if z in horiz or t in vert:
                continue
            for x, y in pos:
                if x > z and (y != t or x not in horiz):
                    valid.append(((x, y), (c, t)))
        if valid:
            u1, u2 = rng.choice(valid)
            return fig, basis, u1, u2


def fork_suite(cases: int = 10_000, seed: int = 0, deep: bool = False) -> SuiteReport:
    """Run :func:`fork_trace` on random valid inputs and audit each certificate."""
    rng = random.Random(seed)
    draw = random_deep_fork_case if deep else random_fork_case
    report = SuiteReport("fork-suite", stats={"irregular": 0, "max_steps": 0})
    for _ in range(cases):
        fig, basis, u1, u2 = draw(rng)
        report.cases += 1
        try:
            cert = fork_trace(fig, basis, u1, u2)
        except (ForcingCounterexample, IterationLimit) as exc:
            report.counterexamples.append({"figure": sorted(fig), "basis": [basis.u, basis.v],
                                           "inputs": [u1, u2], "error": str(exc)})
            continue
        problems = audit_certificate(cert)
        if problems:
            report.counterexamples.append({"figure": sorted(fig), "basis": [basis.u, basis.v],
                                           "inputs": [u1, u2], "error": "; ".join(problems)})
        report.stats["irregular"] += cert.irregular_steps
        report.stats["max_steps"] = max(report.stats["max_steps"], len(cert.steps))
    return report


def audit_certificate(cert) -> list[str]:
    """Re-check every claim a certificate makes against its figure."""
    figure = cert.figure
    out = []
    if len(cert.steps) > 4 * cert.steps[0].pair.total:
        out.append("iteration limit exceeded")
    for step in cert.steps:
        a, b = step.witness
        if (b[0] - a[0], b[1] - a[1]) != step.plane_side or a not in figure or b not in figure:
            out.append(f"step witness does not realise {step.chosen}")
    if cert.irregular_steps > 1:
        out.append(f"{cert.irregular_steps} irregular steps")
    seen_irregular = False
    for prev, nxt in zip(cert.steps, cert.steps[1:]):
        if prev.regular is False:
            seen_irregular = True
        if seen_irregular and nxt.pair.x != nxt.pair.z:
            out.append("first coefficients diverged after the irregular step")
        if prev.regular and nxt.pair.total >= prev.pair.total:
            out.append("regular step did not shrink the pair")
    c = cert.conclusion
    a, b = c.witness
    if a not in figure or b not in figure or (b[0] - a[0], b[1] - a[1]) != c.vector:
        out.append("conclusion witness invalid")
    if realizes(figure, c.vector) is None:
        out.append("conclusion vector not realised")
    want = cert.basis.u if c.target == "u" else cert.basis.v
    if c.vector != want:
        out.append("conclusion is not u or v")
    return out
