import random

import pytest
from hypothesis import given, settings, strategies as st

from leapers.chords import (
    Basis,
    Figure,
    GoodPair,
    chord_check,
    fixed_polyominoes,
    fork_quadrilateral,
    fork_trace,
    is_connected,
    normalize_fork_input,
    quad_check,
    random_figure,
    random_snake,
    realized_set,
    realizes,
)
from leapers.chords.figures import parse_cells
from leapers.chords.polyomino import count_fixed_polyominoes
from leapers.chords.suites import (
    audit_certificate,
    chord_suite,
    fork_suite,
    quad_suite,
    random_chord_suite,
    random_fork_case,
)
from leapers.core import Box
from leapers.errors import NotConvex, NotFork, PreconditionUnmet

L_FIGURE = [(0, 0), (1, 0), (2, 0), (2, 1), (2, 2)]
SQUARE = [(0, 0), (0, 1), (1, 1), (1, 0)]
UNIT = Basis((1, 0), (0, 1))

# fixed polyominoes by cell count, OEIS A001168
A001168 = [1, 2, 6, 19, 63, 216, 760, 2725, 9910]


def test_is_connected():
    assert is_connected({(0, 0)})
    assert is_connected({(0, 0), (1, 0), (1, 1)})
    assert not is_connected({(0, 0), (2, 0)})
    assert not is_connected({(0, 0), (1, 1)})


def test_figure_rejects_empty():
    with pytest.raises(ValueError):
        Figure([])


def test_realizes():
    assert realizes({(0, 0), (1, 0)}, (1, 0)) == ((0, 0), (1, 0))
    a, b = realizes(L_FIGURE, (0, 0))
    assert a == b
    assert realizes(L_FIGURE, (0, 2)) == ((2, 0), (2, 2))
    assert realizes(L_FIGURE, (3, 0)) is None


def test_realized_set():
    assert realized_set({(0, 0)}) == frozenset()
    assert realized_set({(0, 0), (1, 0)}) == {(1, 0), (-1, 0)}
    seg = {(i, 0) for i in range(6)}
    assert realized_set(seg) == {(k, 0) for k in range(-5, 6) if k}


@settings(max_examples=50)
@given(st.integers(0, 2**32), st.integers(1, 30))
def test_realizes_symmetric(seed, size):
    fig = random_figure(seed, size, Box(0, 9, 0, 9))
    for u in realized_set(fig):
        assert realizes(fig, (-u[0], -u[1])) is not None


def test_random_figure():
    assert len(random_figure(1, 1, Box(0, 5, 0, 5))) == 1
    assert random_figure(42, 30, Box(0, 19, 0, 19)) == random_figure(42, 30, Box(0, 19, 0, 19))
    fig = random_figure(7, 40, Box(0, 19, 0, 19))
    assert len(fig) == 40 and is_connected(fig)
    assert all(c in Box(0, 19, 0, 19) for c in fig)
    with pytest.raises(ValueError):
        random_figure(0, 0, Box(0, 1, 0, 1))


@pytest.mark.parametrize("seed", range(5))
def test_random_snake_connected(seed):
    fig = random_snake(seed, 50)
    assert is_connected(fig) and len(fig) <= 50
    assert random_snake(seed, 50) == fig


def test_parse_cells():
    assert parse_cells("0,0; 1,0;-1,2") == [(0, 0), (1, 0), (-1, 2)]


def test_polyomino_counts():
    assert count_fixed_polyominoes(9) == A001168


def _naive_polyominoes(n):
    """Grow every fixed polyomino cell by cell, canonicalising by translation."""
    def canon(cells):
        mx = min(x for x, _ in cells)
        my = min(y for _, y in cells)
        return frozenset((x - mx, y - my) for x, y in cells)

    level = {frozenset({(0, 0)})}
    out = [level]
    for _ in range(n - 1):
        nxt = set()
        for poly in level:
            for x, y in poly:
                for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                    c = (x + dx, y + dy)
                    if c not in poly:
                        nxt.add(canon(poly | {c}))
        level = nxt
        out.append(level)
    return out


def test_polyominoes_match_naive_enumeration():
    naive = _naive_polyominoes(7)
    for size in range(1, 8):
        got = {frozenset(p) for p in fixed_polyominoes(size, size)}
        assert len(got) == len(naive[size - 1])
        canon = set()
        for p in got:
            mx = min(x for x, _ in p)
            my = min(y for _, y in p)
            canon.add(frozenset((x - mx, y - my) for x, y in p))
        assert canon == naive[size - 1]


def test_polyominoes_connected():
    assert all(is_connected(p) for p in fixed_polyominoes(6))


def test_chord_check_examples():
    seg = [(i, 0) for i in range(5)]
    assert chord_check(seg, (1, 0), 4)
    stairs = [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)]
    assert chord_check(stairs, (1, 1), 2)
    with pytest.raises(PreconditionUnmet):
        chord_check([(0, 0), (2, 0)], (1, 0), 2)
    with pytest.raises(PreconditionUnmet):
        chord_check(seg, (2, 0), 4)


def test_chord_suite_nine_cells():
    rep = chord_suite(max_cells=9, max_n=4)
    assert rep.ok and rep.cases > 100_000, rep.summary()


def test_random_chord_suite():
    rep = random_chord_suite(2000, seed=11)
    assert rep.ok and rep.cases == 2000


def test_quad_check_examples():
    block = [(0, 0), (1, 0), (0, 1), (1, 1)]
    side = quad_check(block, (0, 0), (1, 0), (1, 1), (0, 1))
    assert side is not None and realizes(block, side.vector) == side.witness
    # diagonals (1,1) and (1,-1) force a unit step
    fig = [(0, 0), (1, 0), (1, 1), (2, 1), (2, 0)]
    side = quad_check(fig, (0, 0), (1, 0), (1, 1), (0, 1))
    assert side is not None and side.vector in {(1, 0), (0, 1), (-1, 0), (0, -1)}
    a, b = side.witness
    assert (b[0] - a[0], b[1] - a[1]) == side.vector
    with pytest.raises(NotConvex):
        quad_check(block, (0, 0), (2, 0), (1, 0), (0, 1))


def test_quad_suite_small():
    rep = quad_suite(500, seed=5)
    assert rep.ok and rep.cases == 500


def test_normalize_fork_input():
    assert normalize_fork_input((1, 1), (1, -1)) == GoodPair(1, 1, 1, 1)
    assert normalize_fork_input((-2, 3), (1, 5)) == GoodPair(1, 5, 2, 3)
    with pytest.raises(NotFork):
        normalize_fork_input((1, 2), (3, 4))
    with pytest.raises(NotFork):
        normalize_fork_input((0, 2), (3, -4))


def test_fork_quadrilateral():
    assert fork_quadrilateral(GoodPair(1, 1, 1, 1)) == {
        "AB": (-1, 0), "BC": (0, -1), "CD": (1, 0), "DA": (0, 1)}
    assert fork_quadrilateral(GoodPair(2, 1, 1, 1)) == {
        "AB": (-1, 0), "BC": (-1, -1), "CD": (2, 0), "DA": (0, 1)}


@given(st.integers(1, 30), st.integers(1, 30), st.integers(1, 30), st.integers(1, 30))
def test_fork_quadrilateral_closes(x, y, z, t):
    sides = fork_quadrilateral(GoodPair(x, y, z, t)).values()
    assert tuple(map(sum, zip(*sides))) == (0, 0)


def test_fork_trace_square():
    cert = fork_trace(SQUARE, UNIT, (1, 1), (1, -1))
    assert cert.conclusion.vector in {(1, 0), (0, 1)}
    assert not audit_certificate(cert)


def test_fork_trace_l_figure():
    basis = Basis((1, 1), (-1, 1))
    assert basis.plane((1, 1)) == (0, 2) and basis.plane((1, -1)) == (2, 0)
    cert = fork_trace(L_FIGURE, basis, (1, 1), (1, -1))
    c = cert.conclusion
    assert c.vector in {(1, 1), (-1, 1)}
    a, b = c.witness
    assert (b[0] - a[0], b[1] - a[1]) == c.vector and a in L_FIGURE and b in L_FIGURE
    assert not audit_certificate(cert)


def test_fork_trace_preconditions():
    with pytest.raises(PreconditionUnmet):
        fork_trace([(0, 0), (5, 5)], UNIT, (1, 1), (1, -1))
    with pytest.raises(PreconditionUnmet):
        fork_trace(L_FIGURE, UNIT, (3, 3), (1, -1))
    with pytest.raises(NotFork):
        fork_trace(L_FIGURE, UNIT, (1, 1), (2, 2))
    with pytest.raises(PreconditionUnmet):
        Basis((1, 2), (2, 4))


# Figures on which the trace takes exactly one irregular step before concluding.
IRREGULAR = [
    ([(-8, 4), (-8, 5), (-7, 2), (-7, 3), (-7, 4), (-7, 5), (-7, 6), (-6, 2), (-6, 3), (-6, 4),
      (-6, 6), (-6, 10), (-6, 11), (-6, 12), (-5, 1), (-5, 2), (-5, 6), (-5, 10), (-5, 11),
      (-5, 12), (-4, 1), (-4, 6), (-4, 10), (-3, 0), (-3, 1), (-3, 6), (-3, 7), (-3, 8),
      (-3, 10), (-2, 0), (-2, 8), (-2, 9), (-2, 10), (-1, 0), (0, 0)],
     (6, 6), (-5, 12), [GoodPair(6, 6, 5, 12), GoodPair(6, 6, 6, 6)]),
    ([(-2, 6), (-2, 7), (-2, 8), (-2, 9), (-1, 6), (-1, 7), (-1, 8), (-1, 9), (0, -1), (0, 0),
      (0, 4), (0, 5), (0, 6), (0, 7), (0, 8), (1, -1), (1, 4), (2, -1), (2, 0), (2, 1), (2, 4),
      (3, -1), (3, 0), (3, 1), (3, 2), (3, 3), (3, 4), (4, 1), (4, 2), (4, 3), (5, 1), (5, 2),
      (5, 3)],
     (5, 1), (-4, 10), [GoodPair(5, 1, 4, 10), GoodPair(5, 1, 5, 9)]),
]


@pytest.mark.parametrize("cells,u1,u2,pairs", IRREGULAR)
def test_fork_trace_irregular_examples(cells, u1, u2, pairs):
    fig = Figure(cells)
    assert is_connected(fig)
    cert = fork_trace(fig, UNIT, u1, u2)
    assert [s.pair for s in cert.steps] == pairs
    assert cert.steps[0].regular is False and cert.irregular_steps == 1
    nxt = cert.steps[1].pair
    assert nxt.x == nxt.z
    assert not audit_certificate(cert)


def test_fork_suite_standard_small():
    rep = fork_suite(1000, seed=3)
    assert rep.ok, rep.counterexamples[:3]


def test_fork_suite_deep_small():
    rep = fork_suite(15, seed=21, deep=True)
    assert rep.ok, rep.counterexamples[:3]
    assert rep.stats["max_steps"] >= 2


def test_random_fork_case_valid():
    rng = random.Random(9)
    for _ in range(50):
        fig, basis, u1, u2 = random_fork_case(rng)
        assert is_connected(fig)
        assert realizes(fig, basis.plane(u1)) and realizes(fig, basis.plane(u2))
        assert u1[0] * u1[1] * u2[0] * u2[1] < 0


def test_audit_catches_tampering():
    import dataclasses
    cert = fork_trace(SQUARE, UNIT, (1, 1), (1, -1))
    bad = dataclasses.replace(cert, conclusion=dataclasses.replace(cert.conclusion, vector=(2, 0)))
    assert audit_certificate(bad)
