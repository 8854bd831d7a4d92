import itertools

import pytest
from hypothesis import given, settings, strategies as st

from leapers.core import Leaper, LeaperClass, LeaperPath, check_pair, halffree_construction, path_from_moves, product
from leapers.core import verify_embedding
from leapers.errors import BudgetExceeded, NotSublattice, SharedSlope
from leapers.extremal import (
    Case,
    LatticeBasis,
    SearchLimits,
    all_splits,
    diagonal_lattice,
    fundamental_area,
    halffree_bound_report,
    hermite_form,
    lattice_intersection,
    max_grid_bruteforce,
    max_grid_exact,
    multiplicity_diagnostics,
    no_perfect_embedding,
    partition_count_check,
    search_table,
    slope_split,
)
from leapers.extremal.halffree import class_of, direction_classes, split_lattices
from leapers.extremal.lattice import integer_kernel, lattice_index
from leapers.extremal.search import witness_verifies

KNIGHT, CAMEL = Leaper(1, 2), Leaper(1, 3)

# lattices


def test_hermite_form_canonical():
    L = hermite_form([(2, 3), (1, 5)])
    assert L.b1[1] == 0 and L.b1[0] > 0 and L.b2[1] > 0 and 0 <= L.b2[0] < L.b1[0]
    assert L.area == 7
    assert hermite_form([(1, 0), (0, 1)]) == LatticeBasis((1, 0), (0, 1))
    with pytest.raises(ValueError):
        hermite_form([(1, 2), (2, 4)])


def test_degenerate_basis():
    with pytest.raises(ValueError):
        LatticeBasis((1, 2), (-2, -4))


nonzero = st.tuples(st.integers(-6, 6), st.integers(-6, 6))


def bases():
    return st.tuples(nonzero, nonzero).filter(lambda b: b[0][0] * b[1][1] - b[0][1] * b[1][0] != 0)


@given(bases())
def test_hermite_same_lattice(b):
    L = LatticeBasis(*b)
    H = L.canonical()
    assert H.area == L.area
    for v in (L.b1, L.b2):
        assert v in H
    for v in (H.b1, H.b2):
        assert v in L


def test_integer_kernel():
    ker = integer_kernel([[2, 3, -1]])
    assert len(ker) == 2
    for z in ker:
        assert 2 * z[0] + 3 * z[1] - z[2] == 0


def test_intersection_examples():
    unit = LatticeBasis((1, 0), (0, 1))
    assert lattice_intersection(unit, unit) == unit
    got = lattice_intersection(LatticeBasis((2, 0), (0, 1)), LatticeBasis((3, 0), (0, 1)))
    assert got == LatticeBasis((6, 0), (0, 1))


@settings(max_examples=150, deadline=None)
@given(bases(), bases())
def test_intersection_matches_membership_oracle(a, b):
    A, B = LatticeBasis(*a), LatticeBasis(*b)
    C = lattice_intersection(A, B)
    R = 2 * max(A.area, B.area) + 4
    for x in range(-R, R + 1):
        for y in range(-R, R + 1):
            assert ((x, y) in C) == ((x, y) in A and (x, y) in B)


def test_index_and_partition():
    A = LatticeBasis((3, 1), (-3, 1))
    assert lattice_index(A, diagonal_lattice(3)) == 3
    assert partition_count_check(A, 3)
    B = LatticeBasis((1, 3), (-3, -1))
    assert B.area == 8 and partition_count_check(B, 4)
    C = LatticeBasis((1, 3), (-3, 1))
    assert C.area == 10 and lattice_index(C, diagonal_lattice(5)) == 5
    # h = 1: the area-2 lattice is itself the diagonal lattice
    assert lattice_index(LatticeBasis((1, 1), (1, -1)), diagonal_lattice(1)) == 1
    assert partition_count_check(LatticeBasis((1, 1), (1, -1)), 1)
    with pytest.raises(NotSublattice):
        lattice_index(LatticeBasis((2, 0), (0, 2)), diagonal_lattice(1))


# half-free diagnostics

def test_direction_classes():
    assert direction_classes(CAMEL) == ((1, 3), (3, 1), (-1, 3), (-3, 1))
    assert class_of((-1, -3), CAMEL) == (1, 3)
    with pytest.raises(ValueError):
        class_of((1, 2), CAMEL)


def test_slope_split_camel_construction():
    c = halffree_construction(CAMEL, 1)
    split = slope_split(c.alpha, c.beta)
    assert set(split.alpha) == {(3, 1), (-3, 1)}
    assert set(split.beta) == {(1, 3), (-1, 3)}
    assert split.two_two and not split.unused


def test_slope_split_single_and_shared():
    a = path_from_moves((0, 0), [(1, 3)] * 3, CAMEL)
    b = path_from_moves((0, 0), [(3, 1), (-3, 1), (3, 1)], CAMEL)
    assert slope_split(a, b).single_slope
    assert halffree_bound_report(a, b, 20).case is Case.SINGLE_SLOPE
    with pytest.raises(SharedSlope):
        slope_split(b, b)


@pytest.mark.parametrize("a,s,h", [(((1, 3), (-1, 3)), 6, 3), (((1, 3), (3, 1)), 8, 4), (((1, 3), (-3, 1)), 10, 5)])
def test_fundamental_area_camel(a, s, h):
    split = next(sp for sp in all_splits(CAMEL) if set(sp.alpha) == set(a))
    assert fundamental_area(split) == (s, h)


HALFFREE = [Leaper(p, q) for p in range(1, 10) for q in range(p + 1, 10)
            if Leaper(p, q).kind is LeaperClass.HALFFREE]


def test_halffree_list():
    assert Leaper(1, 3) in HALFFREE and Leaper(3, 9) not in HALFFREE and len(HALFFREE) == 9


@pytest.mark.parametrize("leaper", HALFFREE, ids=str)
def test_lattice_claims(leaper):
    p, q = leaper.p, leaper.q
    for split in all_splits(leaper):
        s, h = fundamental_area(split)
        assert s in {2 * p * q, abs(p * p - q * q), p * p + q * q}
        A, B = split_lattices(split)
        assert lattice_intersection(A, B) == diagonal_lattice(h).canonical()
        assert partition_count_check(A, h) and partition_count_check(B, h)


def test_multiplicity_examples():
    single = LeaperPath(((0, 0),), CAMEL)
    assert tuple(multiplicity_diagnostics(single, 3)) == (1, 1, 1, 1)


def test_multiplicity_diagonal_pair():
    # two vertices differing by (h, h) sit on one diagonal
    path = path_from_moves((0, 0), [(1, 3), (3, 1)], CAMEL)
    assert path.vertices[2] == (4, 4)
    assert multiplicity_diagnostics(path, 4).diagonal_plus >= 2


@pytest.mark.parametrize("k", [1, 2, 3])
def test_bound_report_camel_construction(k):
    c = halffree_construction(CAMEL, k)
    rep = halffree_bound_report(c.alpha, c.beta, c.n)
    assert rep.case in (Case.CASE1, Case.CASE2)
    assert (rep.s, rep.h) == (6, 3)
    assert rep.slack == -1
    assert rep.alpha_multiplicity is not None and rep.beta_multiplicity is not None


# search

@pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 4)])
def test_knight_exact(n, m):
    res = max_grid_exact(KNIGHT, n)
    assert res.exhausted and res.m_star == m == res.m_upper
    assert witness_verifies(res)


def test_knight_four_witness_is_rhombus():
    res = max_grid_exact(KNIGHT, 4)
    emb = product(*res.witness)
    assert emb.m == 2 and verify_embedding(emb, KNIGHT, 4)


@pytest.mark.parametrize("leaper,n", [(KNIGHT, 2), (KNIGHT, 4), (CAMEL, 4)])
def test_no_perfect_embedding(leaper, n):
    assert no_perfect_embedding(leaper, n)


def test_no_perfect_embedding_budget():
    with pytest.raises(BudgetExceeded):
        no_perfect_embedding(KNIGHT, 8, SearchLimits(max_nodes=5))


def test_budget_brackets():
    res = max_grid_exact(KNIGHT, 8, SearchLimits(max_nodes=5))
    assert not res.exhausted
    assert res.m_star <= res.m_upper == 8
    assert witness_verifies(res)


def test_limits_positive():
    with pytest.raises(ValueError):
        SearchLimits(max_nodes=0)


@pytest.mark.parametrize("leaper", [KNIGHT, CAMEL, Leaper(2, 3)], ids=str)
def test_search_monotone_and_sound(leaper):
    rows = search_table(leaper, 9)
    assert all(r.exhausted for r in rows)
    stars = [r.m_star for r in rows]
    assert stars == sorted(stars)
    for r in rows:
        assert witness_verifies(r)
        alpha, beta = r.witness
        if len(alpha) > 1:
            slope_split(alpha, beta)  # no slope class shared by both paths


def test_camel_table():
    stars = [r.m_star for r in search_table(CAMEL, 12)]
    assert stars == [1, 1, 1, 1, 2, 3, 4, 4, 4, 5, 5, 6]


@pytest.mark.parametrize("leaper,n", list(itertools.product([KNIGHT, CAMEL], range(1, 7))))
def test_bruteforce_oracle(leaper, n):
    assert max_grid_bruteforce(leaper, n, 3) == min(max_grid_exact(leaper, n).m_star, 3)


def test_camel_search_witness_reports():
    for r in search_table(CAMEL, 10):
        alpha, beta = r.witness
        rep = halffree_bound_report(alpha, beta, r.n)
        assert rep.slack <= 0.5
