import itertools
import random

import pytest

from geomred.field import field_of_order
from geomred.projective import Subspace, enumerate_subspaces, is_disjoint, points_of
from geomred.reduction import ReductionMap
from geomred.regulus import (Regulus, RegulusError, first_independent_points, is_regulus,
                             regulus_from_subline, transversal_span, transversal_through)
from geomred.subgeometry import Subgeometry

from oracles import brute_transversals, point_set, vector_set


def canonical_regulus(q, s):
    m = ReductionMap(q, s, 1)
    return m, regulus_from_subline(m, Subgeometry(m.emb, [(1, 0), (0, 1)]))


def pts(S):
    return point_set(S.field, vector_set(S.field, S.rows, S.n + 1))


@pytest.mark.parametrize("q,s,count", [(2, 1, 3), (3, 1, 4), (2, 2, 3), (4, 1, 5)])
def test_regulus_from_subline(q, s, count):
    m, R = canonical_regulus(q, s)
    assert len(R.elements) == count
    assert all(el.pdim == s and el.n == 2 * s + 1 for el in R.elements)
    assert is_regulus(R.elements, exhaustive=True)


def test_transversal_unique_pg32():
    m, R = canonical_regulus(2, 1)
    s1, s2, s3 = R.elements
    F = m.small
    for S in points_of(s1):
        line = transversal_through(s1, s2, s3, S)
        brute = brute_transversals(F, 3, [pts(s2), pts(s3)], S)
        assert brute == {pts(line)}
        # one point on each element
        for el in R.elements:
            assert len(pts(line) & pts(el)) == 1


def test_transversal_errors():
    m, R = canonical_regulus(2, 1)
    s1, s2, s3 = R.elements
    with pytest.raises(RegulusError):
        transversal_through(s1, s1, s3, points_of(s1)[0])
    with pytest.raises(RegulusError):
        transversal_through(s1, s2, s3, points_of(s2)[0])


def test_wrong_cardinality():
    m, R = canonical_regulus(2, 1)
    assert not is_regulus(R.elements[:2])
    m3, R3 = canonical_regulus(3, 1)
    assert not is_regulus(R3.elements[:3])


def test_fourth_line_off_the_regulus():
    m, R = canonical_regulus(3, 1)
    F = m.small
    els = list(R.elements)
    found = False
    for L in enumerate_subspaces(F, 3, 1):
        if L in els or not all(is_disjoint(L, e) for e in els[:3]):
            continue
        assert not is_regulus(els[:3] + [L])
        found = True
        break
    assert found


@pytest.mark.parametrize("q,s", [(2, 1), (2, 2), (3, 1)])
def test_transversal_span_dimensions(q, s):
    m, R = canonical_regulus(q, s)
    for k in range(1, s + 2):
        P = first_independent_points(R.elements[0], k)
        T = transversal_span(R, P)
        assert T.pdim == 2 * k - 1
        for el in R.elements:
            inter = pts(T) & pts(el)
            assert len(inter) == (q ** k - 1) // (q - 1)


def test_transversal_span_frozen_pg32():
    m, R = canonical_regulus(2, 1)
    T = transversal_span(R, first_independent_points(R.elements[0], 2))
    assert T == Subspace.whole(m.small, 3)


def test_transversal_span_rejects_mixed_points():
    m, R = canonical_regulus(2, 1)
    a, b = points_of(R.elements[0])[0], points_of(R.elements[1])[0]
    with pytest.raises(RegulusError):
        transversal_span(R, [a, b])


def test_element_containing():
    m, R = canonical_regulus(3, 1)
    for i, el in enumerate(R.elements):
        for P in points_of(el):
            assert R.element_containing(P) == i
