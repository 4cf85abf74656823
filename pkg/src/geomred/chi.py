"""The (st-1)-space chi meeting every field-reduced point of a subgeometry in an (s-1)-space.

Two independent constructions are provided. ``chi_inductive`` follows the
induction on the dimension of the subgeometry: sublines give reguli, reguli
give spans of transversal lines, and the pieces are glued along a common
(s-1)-space. ``chi_algebraic`` writes chi down directly for the canonical
subgeometry as GF(q)^t tensored with the span of a, a^2, ..., a^s.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .projective import Subspace, contains, meet, span
from .reduction import ReductionMap
from .regulus import Regulus, first_independent_points, transversal_span
from .subgeometry import Subgeometry, canonical_subgeometry


class ChiConstructionError(RuntimeError):
    def __init__(self, message: str, trace: list):
        super().__init__(message)
        self.trace = trace


@dataclass
class ChiResult:
    chi: Subspace
    construction: str
    trace: list = field(default_factory=list)


@dataclass
class ChiReport:
    rows: list  # (point, meet pdim, ok)

    @property
    def ok(self) -> bool:
        return all(r[2] for r in self.rows)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.rows if r[2])


def _check_reduction(C: Subgeometry, m: ReductionMap):
    if m.big != C.emb.big or m.small != C.emb.small:
        raise ValueError("reduction map and subgeometry use different fields")
    if C.n != m.t:
        raise ValueError(f"C lives in PG({C.n}, Q) but the map reduces PG({m.t}, Q)")
    if C.dim != C.n:
        raise ValueError("C must be a subgeometry of maximal dimension")


def chi_inductive(C: Subgeometry, m: ReductionMap) -> ChiResult:
    """Build chi by induction on the number of generators of C."""
    _check_reduction(C, m)
    trace = []
    chi = _chi_rec(C, m, len(C.gens), trace)
    want = m.s * len(C.gens) - 1
    if chi.pdim != want:
        raise ChiConstructionError(f"chi has pdim {chi.pdim}, expected {want}", trace)
    return ChiResult(chi, "inductive", trace)


def _expect(trace, level, what, got, want):
    trace[-1]["checks"].append({"what": what, "pdim": got, "expected": want})
    if got != want:
        raise ChiConstructionError(f"level {level}: {what} has pdim {got}, expected {want}", trace)


def _chi_rec(C: Subgeometry, m: ReductionMap, k: int, trace: list) -> Subspace:
    """An (sk-1)-space in F(span of gens[:k]) meeting F(Q) in an (s-1)-space for Q in C_k."""
    s = m.s
    small = m.small
    gens = C.gens[:k]
    if s == 0:
        trace.append({"level": k, "case": "s=0", "checks": []})
        return Subspace.empty(small, m.n_small)

    if k == 1:
        sigma = m.point(gens[0])
        chi = Subspace.span_of(small, m.n_small, sigma.rows[:s])
        trace.append({"level": 1, "case": "hyperplane", "checks": []})
        _expect(trace, 1, "hyperplane of F(Q)", chi.pdim, s - 1)
        return chi

    if k == 2:
        L = Subgeometry(C.emb, gens)
        R = Regulus(tuple(m.pointset(L.points)))
        T = transversal_span(R, first_independent_points(R.elements[0], s))
        trace.append({"level": 2, "case": "regulus", "subline": [list(g) for g in gens],
                      "checks": []})
        _expect(trace, 2, "T", T.pdim, 2 * s - 1)
        for i, el in enumerate(R.elements):
            _expect(trace, 2, f"T meet element {i}", meet(T, el).pdim, s - 1)
        return T

    T_prev = _chi_rec(C, m, k - 1, trace)
    Cp = Subgeometry(C.emb, gens[:-1])
    Q = Cp.points[0]
    L = Subgeometry(C.emb, [Cp.lattice_vector(Q), gens[-1]])
    sigma_Q = m.point(Q)
    sigma_Qp = meet(T_prev, sigma_Q)
    Pi_L = m.subspace(L.span())
    Pi_Sigma = m.subspace(Cp.span())
    R_L = Regulus(tuple(m.pointset(L.points)))
    trace.append({"level": k, "case": "glue", "Q": list(Q),
                  "subline": [list(g) for g in L.gens], "checks": []})
    _expect(trace, k, "T_C'", T_prev.pdim, s * (k - 1) - 1)
    _expect(trace, k, "sigma_Q'", sigma_Qp.pdim, s - 1)
    _expect(trace, k, "Pi_L", Pi_L.pdim, 2 * s + 1)
    _expect(trace, k, "Pi_Sigma", Pi_Sigma.pdim, s * (k - 1) + k - 2)
    if not contains(Pi_Sigma, T_prev):
        raise ChiConstructionError(f"level {k}: T_C' is not inside F(span C')", trace)
    inter = meet(Pi_L, Pi_Sigma)
    _expect(trace, k, "Pi_L meet Pi_Sigma", inter.pdim, s)
    if inter != sigma_Q:
        raise ChiConstructionError(f"level {k}: Pi_L meets Pi_Sigma outside sigma_Q", trace)
    T_L = transversal_span(R_L, [tuple(r) for r in sigma_Qp.rows])
    _expect(trace, k, "T_L", T_L.pdim, 2 * s - 1)
    glue = meet(T_L, T_prev)
    _expect(trace, k, "T_L meet T_C'", glue.pdim, s - 1)
    if glue != sigma_Qp:
        raise ChiConstructionError(f"level {k}: T_L meets T_C' outside sigma_Q'", trace)
    T = span(T_L, T_prev)
    _expect(trace, k, "T", T.pdim, s * k - 1)
    return T


def chi_algebraic(C: Subgeometry, m: ReductionMap) -> ChiResult:
    """chi = span of expand(a^i e_j) for i = 1..s and j over C's coordinates."""
    _check_reduction(C, m)
    n = C.n
    if C != canonical_subgeometry(C.emb, n, n):
        raise ValueError("chi_algebraic needs C in canonical position")
    gens = []
    for j in range(n + 1):
        for b in m.basis[1:]:
            gens.append(m.expand([b if i == j else 0 for i in range(n + 1)]))
    chi = Subspace.span_of(m.small, m.n_small, gens)
    if chi.pdim != m.s * (n + 1) - 1:
        raise RuntimeError("algebraic chi has the wrong dimension")
    return ChiResult(chi, "algebraic", [])


def verify_chi(chi: Subspace, C: Subgeometry, m: ReductionMap) -> ChiReport:
    rows = []
    for Q in C.points:
        d = meet(chi, m.point(Q)).pdim
        rows.append((Q, d, d == m.s - 1))
    return ChiReport(rows)
