import random

import pytest

from geomred.chi import chi_algebraic, chi_inductive, verify_chi
from geomred.projective import Subspace, meet, span
from geomred.reduction import ReductionMap
from geomred.subgeometry import Subgeometry, canonical_subgeometry

from oracles import point_set, vector_set

PARAMS = [(2, 1, 1), (2, 1, 2), (2, 1, 3), (2, 2, 2), (3, 1, 2), (3, 1, 3), (4, 1, 2), (2, 2, 3),
          (2, 0, 3)]


def setup(q, s, t):
    m = ReductionMap(q, s, t - 1)
    return m, canonical_subgeometry(m.emb, t - 1, t - 1)


def brute_meet_size(A, B):
    F = A.field
    return len(point_set(F, vector_set(F, A.rows, A.n + 1)) & point_set(F, vector_set(F, B.rows, B.n + 1)))


@pytest.mark.parametrize("q,s,t", PARAMS)
@pytest.mark.parametrize("build", [chi_inductive, chi_algebraic])
def test_chi_property(q, s, t, build):
    m, C = setup(q, s, t)
    res = build(C, m)
    assert res.chi.pdim == s * t - 1
    rep = verify_chi(res.chi, C, m)
    assert rep.ok and rep.passed == (q ** t - 1) // (q - 1)


@pytest.mark.parametrize("q,s,t", [(2, 1, 2), (2, 1, 3), (3, 1, 2), (2, 2, 2)])
def test_chi_meets_by_point_count(q, s, t):
    m, C = setup(q, s, t)
    chi = chi_inductive(C, m).chi
    for Q in C.points:
        assert brute_meet_size(chi, m.point(Q)) == (q ** s - 1) // (q - 1)


@pytest.mark.parametrize("q,s,t", [(2, 1, 3), (3, 1, 3), (2, 2, 3)])
def test_trace_assertions_recorded(q, s, t):
    m, C = setup(q, s, t)
    res = chi_inductive(C, m)
    levels = [e["level"] for e in res.trace]
    assert levels == list(range(2, t + 1))
    for entry in res.trace:
        for c in entry["checks"]:
            assert c["pdim"] == c["expected"]


def test_frozen_q2_s1_t2():
    m, C = setup(2, 1, 2)
    a = m.big.generator
    alg = chi_algebraic(C, m).chi
    assert alg == Subspace.span_of(m.small, 3, [m.expand((a, 0)), m.expand((0, a))])
    assert alg.rows == ((0, 1, 0, 0), (0, 0, 0, 1))
    ind = chi_inductive(C, m).chi
    assert ind.pdim == 1
    # a transversal line of the regulus coming from the subline C
    for Q in C.points:
        assert meet(ind, m.point(Q)).pdim == 0


def test_t1_base_case():
    m, C = setup(2, 2, 1)
    chi = chi_inductive(C, m).chi
    assert chi.pdim == 1
    assert meet(chi, m.point(C.points[0])) == chi


def test_random_space_usually_fails():
    q, s, t = 2, 1, 3
    m, C = setup(q, s, t)
    rng = random.Random(3)
    failures = 0
    for _ in range(20):
        rows = [tuple(rng.randrange(q) for _ in range(m.n_small + 1)) for _ in range(s * t)]
        R = Subspace.span_of(m.small, m.n_small, rows)
        if R.pdim == s * t - 1 and not verify_chi(R, C, m).ok:
            failures += 1
    assert failures > 0


def test_non_canonical_C_for_algebraic():
    m = ReductionMap(2, 1, 1)
    a = m.big.generator
    C = Subgeometry(m.emb, [(1, a), (0, 1)])
    with pytest.raises(ValueError):
        chi_algebraic(C, m)
    res = chi_inductive(C, m)
    assert verify_chi(res.chi, C, m).ok


def test_non_maximal_C_rejected():
    m = ReductionMap(2, 1, 2)
    with pytest.raises(ValueError):
        chi_inductive(canonical_subgeometry(m.emb, 1, 2), m)
