import pytest

from geomred.field import embed, make_field
from geomred.geometries import y_setup
from geomred.projective import Subspace, mat_vec, normalize
from geomred.subgeometry import (Subgeometry, canonical_position, canonical_subgeometry,
                                 coset_representatives, lines_of_Y_through, subgeo_extend,
                                 subline_in, transform)


def emb_for(q, s):
    p = {2: 2, 3: 3, 4: 2}[q]
    a = {2: 1, 3: 1, 4: 2}[q]
    return embed(make_field(p, a), make_field(p, a * (s + 1)))


def test_canonical_points_are_rational():
    e = emb_for(2, 1)
    C = canonical_subgeometry(e, 2, 2)
    assert len(C) == 7
    assert all(all(x in (0, 1) for x in P) for P in C.points)


def test_subline_of_pg14():
    e = emb_for(2, 1)
    L = Subgeometry(e, [(1, 0), (2, 1)])
    assert len(L) == 3 and L.dim == 1


def test_single_vector():
    C = Subgeometry(emb_for(2, 1), [(0, 2)])
    assert C.points == ((0, 1),)


def test_dependent_generators_rejected():
    with pytest.raises(ValueError):
        Subgeometry(emb_for(2, 1), [(1, 0), (2, 0)])


@pytest.mark.parametrize("q,size", [(2, 3), (3, 4)])
def test_subline_in_canonical(q, size):
    C = canonical_subgeometry(emb_for(q, 1), 2, 2)
    L = subline_in(C, (1, 0, 0), (0, 1, 0))
    assert len(L) == size
    assert L.point_set <= C.point_set
    if q == 2:
        assert L.point_set == {(1, 0, 0), (0, 1, 0), (1, 1, 0)}
    with pytest.raises(ValueError):
        subline_in(C, (1, 0, 0), (1, 0, 0))


def test_extend_gives_distinct_B():
    e = emb_for(2, 1)
    C = canonical_subgeometry(e, 1, 2)
    a = e.big.generator
    B1 = subgeo_extend(C, (0, 0, 1))
    B2 = subgeo_extend(C, (0, 0, a))
    assert B1 != B2
    assert C.point_set <= B1.point_set and C.point_set <= B2.point_set
    assert B1 == canonical_subgeometry(e, 2, 2)
    assert len(B1) == 7


def test_coset_representatives():
    e = emb_for(2, 2)
    reps = coset_representatives(e)
    big, small = e.big, e.small
    assert len(reps) == 7
    classes = {frozenset(big.mul(r, e(c)) for c in range(1, small.order)) for r in reps}
    assert len(classes) == 7
    assert set().union(*classes) == set(range(1, big.order))


@pytest.mark.parametrize("q,s,t", [(2, 1, 2), (2, 1, 1), (3, 1, 2), (2, 2, 2), (4, 1, 1)])
def test_lines_through_affine_point_brute(q, s, t):
    sigma, C = y_setup(s, t, q)
    big = C.emb.big
    P = (0,) * t + (1,)
    P = tuple(big.generator if i == 0 else x for i, x in enumerate(P))
    mine = {B.point_set for B in lines_of_Y_through(C, sigma, P)}
    # every lambda in GF(Q)*, not just coset representatives
    brute = {subgeo_extend(C, [big.mul(lam, x) for x in P]).point_set
             for lam in range(1, big.order)}
    assert mine == brute
    assert len(mine) == (big.order - 1) // (q - 1)
    for pts in mine:
        assert {X for X in pts if sigma.contains_vector(X)} == set(C.point_set)
        assert len(pts) - len(C) == q ** t


def test_canonical_position_roundtrip():
    e = emb_for(2, 1)
    big = e.big
    a = big.generator
    C = Subgeometry(e, [(1, a, 0), (0, 1, 1)])
    M = canonical_position(C)
    C2 = transform(C, M)
    assert C2 == canonical_subgeometry(e, 1, 2)
    for P in C.points:
        assert normalize(big, mat_vec(big, M, P)) in C2
