import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from geomred.field import field_of_order
from geomred.projective import (AmbientMismatch, BudgetExceeded, Subspace, contains,
                                count_disjoint_spaces, count_subspaces, dual, enumerate_subspaces,
                                gaussian_binomial, is_disjoint, matrix_inverse, mat_vec, meet,
                                meet_pdim, points_of, rank, span)

from oracles import (gaussian_binomial_brute, point_set, subspaces_by_points, vdim,
                     vector_set)


def random_subspace(F, n, k, rng):
    while True:
        rows = [tuple(rng.randrange(F.order) for _ in range(n + 1)) for _ in range(k + 1)]
        S = Subspace.span_of(F, n, rows)
        if S.pdim == k:
            return S


def test_gaussian_binomials_frozen():
    assert gaussian_binomial(4, 2, 2) == 35
    assert count_subspaces(3, 2, 1) == 35
    assert count_subspaces(2, 3, 0) == 13
    assert count_subspaces(4, 2, 1) == 155


@pytest.mark.parametrize("n,q", [(2, 2), (3, 2), (2, 3), (2, 4), (4, 2)])
def test_gaussian_binomial_formula(n, q):
    for k in range(-1, n + 1):
        assert count_subspaces(n, q, k) == gaussian_binomial_brute(n + 1, k + 1, q)


@pytest.mark.parametrize("n,q", [(2, 2), (3, 2), (2, 3), (2, 4)])
def test_enumeration_matches_brute_force(n, q):
    F = field_of_order(q)
    for k in range(0, n + 1):
        mine = {point_set(F, vector_set(F, S.rows, n + 1)) for S in enumerate_subspaces(F, n, k)}
        assert len(mine) == count_subspaces(n, q, k)
        assert mine == subspaces_by_points(F, n, k)


def test_enumeration_budget():
    F = field_of_order(2)
    with pytest.raises(BudgetExceeded):
        enumerate_subspaces(F, 5, 2, budget=100)


@pytest.mark.parametrize("q,n", [(2, 3), (3, 3), (4, 2), (2, 5)])
def test_lattice_operations_against_vector_sets(q, n):
    F = field_of_order(q)
    rng = random.Random(q * 100 + n)
    for _ in range(40):
        A = random_subspace(F, n, rng.randrange(-1, n + 1), rng)
        B = random_subspace(F, n, rng.randrange(0, n + 1), rng)
        VA, VB = vector_set(F, A.rows, n + 1) if A.rows else frozenset({(0,) * (n + 1)}), \
            vector_set(F, B.rows, n + 1)
        M = meet(A, B)
        VM = vector_set(F, M.rows, n + 1) if M.rows else frozenset({(0,) * (n + 1)})
        assert VM == VA & VB
        assert meet_pdim(A, B) == M.pdim
        assert is_disjoint(A, B) == (len(VA & VB) == 1)
        assert contains(B, A) == (VA <= VB)
        assert vdim(F, vector_set(F, span(A, B).rows, n + 1)) == span(A, B).rank


@pytest.mark.parametrize("q,n", [(2, 3), (3, 2), (4, 2), (5, 2)])
def test_dual_is_annihilator(q, n):
    F = field_of_order(q)
    rng = random.Random(n)
    for k in range(-1, n + 1):
        A = random_subspace(F, n, k, rng) if k >= 0 else Subspace.empty(F, n)
        D = dual(A)
        assert D.pdim == n - 1 - A.pdim
        for a in A.rows:
            for d in D.rows:
                acc = 0
                for x, y in zip(a, d):
                    acc = F.add(acc, F.mul(x, y))
                assert acc == 0
        assert dual(D) == A


def test_points_of_counts():
    F = field_of_order(3)
    W = Subspace.whole(F, 2)
    pts = points_of(W)
    assert len(pts) == 13 == len(set(pts))
    assert pts[0] == (1, 0, 0)
    with pytest.raises(ValueError):
        points_of(Subspace.empty(F, 2))


def test_ambient_mismatch():
    F = field_of_order(2)
    with pytest.raises(AmbientMismatch):
        meet(Subspace.whole(F, 2), Subspace.whole(F, 3))
    with pytest.raises(AmbientMismatch):
        Subspace.span_of(F, 2, [(1, 0)])


@pytest.mark.parametrize("s,t,q", [(1, 1, 2), (1, 2, 2), (2, 1, 2), (1, 2, 3), (2, 2, 2)])
def test_disjoint_count(s, t, q):
    F = field_of_order(q)
    pi = Subspace.span_of(F, s + t, [tuple(int(i == j) for j in range(s + t + 1)) for i in range(s + 1)])
    n = sum(1 for S in enumerate_subspaces(F, s + t, t - 1) if is_disjoint(S, pi))
    assert n == count_disjoint_spaces(s, t, q)


def test_matrix_inverse():
    F = field_of_order(4)
    M = [[1, 2, 0], [0, 1, 3], [2, 0, 1]]
    Mi = matrix_inverse(F, M)
    for i in range(3):
        e = tuple(int(i == j) for j in range(3))
        assert mat_vec(F, Mi, mat_vec(F, M, e)) == e
    with pytest.raises(ValueError):
        matrix_inverse(F, [[1, 1], [1, 1]])


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4, 5]), st.integers(1, 4), st.data())
def test_rref_is_canonical(q, n, data):
    F = field_of_order(q)
    rows = data.draw(st.lists(st.tuples(*[st.integers(0, q - 1)] * (n + 1)), min_size=1, max_size=4))
    A = Subspace.span_of(F, n, rows)
    # any other spanning set of the same space yields identical rows
    shuffled = list(A.rows)[::-1] + list(rows)
    assert Subspace.span_of(F, n, shuffled) == A
    assert A.rank == rank(F, rows, n + 1)
    for r in rows:
        assert A.contains_vector(r)
