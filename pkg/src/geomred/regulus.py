"""Reguli of PG(2s+1, q), their transversal lines, and spans of transversals."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .projective import Subspace, is_disjoint, meet, meet_pdim, points_of, rank, span
from .reduction import ReductionMap
from .subgeometry import Subgeometry


class RegulusError(ValueError):
    pass


@dataclass(frozen=True)
class Regulus:
    elements: tuple

    @property
    def s(self) -> int:
        return self.elements[0].pdim

    def element_containing(self, P) -> int:
        for i, el in enumerate(self.elements):
            if el.contains_vector(P):
                return i
        raise RegulusError(f"{P} lies on no element of the regulus")


def transversal_through(s1: Subspace, s2: Subspace, s3: Subspace, S) -> Subspace:
    """The unique line through S ∈ s1 meeting s2 and s3.

    <S, s2> meets s3 in a single point T, and the line is ST.
    """
    if not (is_disjoint(s1, s2) and is_disjoint(s1, s3) and is_disjoint(s2, s3)):
        raise RegulusError("the three spaces are not pairwise disjoint")
    if not s1.contains_vector(S):
        raise RegulusError("S is not a point of the first space")
    P = Subspace.point(s1.field, S)
    T = meet(span(P, s2), s3)
    if T.pdim != 0:
        raise RegulusError(f"<S, s2> meets s3 in dimension {T.pdim}")
    return span(P, T)


def is_regulus(elements, exhaustive: bool = False) -> bool:
    """Check the regulus axioms.

    Closure is checked on the transversals of the first three elements through
    every point of the first; by uniqueness of transversals this covers all
    triples. ``exhaustive`` repeats the check over every ordered triple.
    """
    elements = list(elements)
    if len(elements) < 3:
        return False
    F = elements[0].field
    n = elements[0].n
    s = elements[0].pdim
    if n != 2 * s + 1 or len(elements) != F.order + 1:
        return False
    if any(e.pdim != s or e.n != n or e.field != F for e in elements):
        return False
    if any(not is_disjoint(a, b) for a, b in itertools.combinations(elements, 2)):
        return False
    triples = (itertools.permutations(range(len(elements)), 3) if exhaustive else [(0, 1, 2)])
    for i, j, k in triples:
        for S in points_of(elements[i]):
            line = transversal_through(elements[i], elements[j], elements[k], S)
            if any(meet_pdim(line, el) != 0 for el in elements):
                return False
    return True


def regulus_from_subline(m: ReductionMap, L: Subgeometry) -> Regulus:
    if m.t != 1:
        raise ValueError("need a reduction map of PG(1, q^(s+1))")
    if L.dim != 1 or L.n != 1:
        raise ValueError("L must be a subline of PG(1, q^(s+1))")
    R = Regulus(tuple(m.pointset(L.points)))
    if not is_regulus(R.elements):
        raise RegulusError("field-reduced subline failed the regulus check")
    return R


def first_independent_points(A: Subspace, k: int) -> list:
    """Lexicographically first k independent points of A (in point order)."""
    F = A.field
    for combo in itertools.combinations(points_of(A), k):
        if rank(F, combo, A.n + 1) == k:
            return list(combo)
    raise ValueError(f"{A!r} has no {k} independent points")


def transversal_span(R: Regulus, pts) -> Subspace:
    """Span of the transversal lines of R through the given points of one element."""
    pts = [tuple(P) for P in pts]
    if not pts:
        raise ValueError("need at least one point")
    idx = {R.element_containing(P) for P in pts}
    if len(idx) != 1:
        raise RegulusError("points lie on different elements")
    i = idx.pop()
    F = R.elements[0].field
    if rank(F, pts, R.elements[0].n + 1) != len(pts):
        raise RegulusError("points are dependent")
    j, k = [x for x in range(len(R.elements)) if x != i][:2]
    el = R.elements
    lines = [transversal_through(el[i], el[j], el[k], P) for P in pts]
    return span(*lines)
