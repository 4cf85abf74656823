"""The point-line geometries T*(K), X(s,t,q) and Y(s,t,q) as finite incidence structures."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from .field import embed, field_of_order, make_field, prime_power
from .projective import (DEFAULT_BUDGET, Subspace, contains, coordinate_subspace,
                         enumerate_subspaces, is_disjoint, meet_pdim, points_of, span)
from .subgeometry import Subgeometry, canonical_subgeometry, lines_of_Y_through


class GeometryError(ValueError):
    pass


@dataclass
class IncidenceGeometry:
    points: list          # canonical labels
    lines: list           # sorted tuples of point indices
    meta: dict
    point_objects: list = field(default_factory=list, repr=False)
    line_objects: list = field(default_factory=list, repr=False)

    def validate(self):
        if len(set(self.points)) != len(self.points):
            raise GeometryError("duplicate points")
        if len(set(self.lines)) != len(self.lines):
            raise GeometryError("duplicate lines")
        n = len(self.points)
        for ln in self.lines:
            if len(ln) < 2 or list(ln) != sorted(set(ln)) or ln[0] < 0 or ln[-1] >= n:
                raise GeometryError(f"malformed line {ln}")
        if not is_partial_linear_space(self):
            raise GeometryError("two points lie on more than one common line")

    def lines_through(self) -> list[list[int]]:
        out = [[] for _ in self.points]
        for j, ln in enumerate(self.lines):
            for i in ln:
                out[i].append(j)
        return out

    def incidences(self) -> set:
        return {(i, j) for j, ln in enumerate(self.lines) for i in ln}


def is_partial_linear_space(G: IncidenceGeometry) -> bool:
    seen = set()
    for ln in G.lines:
        for pair in itertools.combinations(ln, 2):
            if pair in seen:
                return False
            seen.add(pair)
    return True


@dataclass(frozen=True)
class GeometryStats:
    npoints: int
    nlines: int
    line_sizes: tuple   # sorted (size, multiplicity) pairs
    degrees: tuple      # sorted (degree, multiplicity) pairs
    partial_linear: bool

    def as_dict(self):
        return {
            "points": self.npoints,
            "lines": self.nlines,
            "line_sizes": {str(k): v for k, v in self.line_sizes},
            "degrees": {str(k): v for k, v in self.degrees},
            "partial_linear_space": self.partial_linear,
        }


def geometry_stats(G: IncidenceGeometry) -> GeometryStats:
    sizes = Counter(len(ln) for ln in G.lines)
    degrees = Counter(len(x) for x in G.lines_through())
    return GeometryStats(len(G.points), len(G.lines), tuple(sorted(sizes.items())),
                         tuple(sorted(degrees.items())), is_partial_linear_space(G))


def point_label(P) -> str:
    return ",".join(map(str, P))


def build_X(s: int, t: int, q: int, pi: Subspace, budget: int = DEFAULT_BUDGET) -> IncidenceGeometry:
    """Points: (t-1)-spaces of PG(s+t,q) disjoint from pi. Lines: t-spaces meeting pi in a point."""
    F = field_of_order(q)
    n = s + t
    if pi.field != F or pi.n != n or pi.pdim != s:
        raise GeometryError(f"pi must be an {s}-space of PG({n},{q})")
    pts = [S for S in enumerate_subspaces(F, n, t - 1, budget) if is_disjoint(S, pi)]
    index = {S: i for i, S in enumerate(pts)}
    lines, line_objs = [], []
    for T in enumerate_subspaces(F, n, t, budget):
        if meet_pdim(T, pi) != 0:
            continue
        members = tuple(i for S, i in index.items() if contains(T, S))
        lines.append(members)
        line_objs.append(T)
    G = IncidenceGeometry([S.label() for S in pts], lines,
                          {"q": q, "s": s, "t": t, "kind": "X"}, pts, line_objs)
    return G


def y_setup(s: int, t: int, q: int):
    """Canonical Sigma (X_t = 0) and C (GF(q)-rational points of Sigma) in PG(t, q^(s+1))."""
    p, a = prime_power(q)
    big = make_field(p, a * (s + 1))
    emb = embed(make_field(p, a), big)
    sigma = coordinate_subspace(big, t, range(t))
    C = canonical_subgeometry(emb, t - 1, t)
    return sigma, C


def affine_points(sigma: Subspace) -> list:
    whole = Subspace.whole(sigma.field, sigma.n)
    return [P for P in points_of(whole) if not sigma.contains_vector(P)]


def build_Y(s: int, t: int, q: int, sigma: Subspace | None = None,
            C: Subgeometry | None = None) -> IncidenceGeometry:
    """Points: affine points of PG(t,q^(s+1)). Lines: B minus C over t-dim subgeometries B ⊇ C."""
    if sigma is None or C is None:
        sigma, C = y_setup(s, t, q)
    if C.dim != t - 1 or C.n != t or sigma.pdim != t - 1:
        raise GeometryError("C must be a (t-1)-dimensional subgeometry of PG(t, q^(s+1))")
    if not all(sigma.contains_vector(P) for P in C.points):
        raise GeometryError("C is not contained in Sigma")
    pts = affine_points(sigma)
    index = {P: i for i, P in enumerate(pts)}
    lines, line_objs = [], []
    found = set()
    for P in pts:
        for B in lines_of_Y_through(C, sigma, P):
            rest = [X for X in B.points if X not in C]
            if len(rest) != len(B.points) - len(C.points):
                raise GeometryError("B does not contain C")
            if any(X not in index for X in rest):
                raise GeometryError("B meets Sigma outside C")
            members = tuple(sorted(index[X] for X in rest))
            if members in found:
                continue
            found.add(members)
            lines.append(members)
            line_objs.append(B)
    return IncidenceGeometry([point_label(P) for P in pts], lines,
                             {"q": q, "s": s, "t": t, "kind": "Y"}, pts, line_objs)


def subgeometry_D(s: int, t: int, q: int) -> Subgeometry:
    """An s-dim F_q-subgeometry of PG(s, q^t), placed in X_(s+1) = 0 of PG(s+1, q^t)."""
    p, a = prime_power(q)
    emb = embed(make_field(p, a), make_field(p, a * t))
    return canonical_subgeometry(emb, s, s + 1)


def build_Tstar(K, F, n: int, meta: dict | None = None) -> IncidenceGeometry:
    """Linear representation of K ⊆ H∞ (X_n = 0) in PG(n, F)."""
    K = [tuple(P) for P in K]
    if not K:
        raise GeometryError("K is empty")
    H = coordinate_subspace(F, n, range(n))
    if not all(len(P) == n + 1 and H.contains_vector(P) for P in K):
        raise GeometryError("K is not contained in the hyperplane at infinity")
    pts = affine_points(H)
    index = {P: i for i, P in enumerate(pts)}
    lines, found = [], set()
    for P in K:
        Ps = Subspace.point(F, P)
        for A in pts:
            ln = span(Ps, Subspace.point(F, A))
            members = tuple(sorted(index[X] for X in points_of(ln) if X != P))
            if members not in found:
                found.add(members)
                lines.append(members)
    meta = dict(meta or {})
    meta.setdefault("kind", "Tstar")
    return IncidenceGeometry([point_label(P) for P in pts], lines, meta, pts)


def build_Tstar_D(s: int, t: int, q: int) -> IncidenceGeometry:
    D = subgeometry_D(s, t, q)
    return build_Tstar(D.points, D.emb.big, s + 1, {"q": q, "s": s, "t": t, "kind": "Tstar"})


# -- incidence export ------------------------------------------------------

def format_incidence(G: IncidenceGeometry) -> str:
    m = G.meta
    head = (f"p {len(G.points)} l {len(G.lines)} q {m['q']} s {m['s']} t {m['t']} "
            f"kind {m['kind']}")
    return "\n".join([head] + [" ".join(map(str, ln)) for ln in G.lines]) + "\n"


def parse_incidence(text: str) -> IncidenceGeometry:
    rows = text.splitlines()
    if not rows:
        raise GeometryError("empty incidence file")
    head = rows[0].split()
    if len(head) != 12 or head[0::2] != ["p", "l", "q", "s", "t", "kind"]:
        raise GeometryError(f"bad header: {rows[0]!r}")
    kv = dict(zip(head[0::2], head[1::2]))
    npts, nlines = int(kv["p"]), int(kv["l"])
    lines = [tuple(int(x) for x in r.split()) for r in rows[1:]]
    if len(lines) != nlines:
        raise GeometryError(f"header announces {nlines} lines, found {len(lines)}")
    meta = {"q": int(kv["q"]), "s": int(kv["s"]), "t": int(kv["t"]), "kind": kv["kind"]}
    return IncidenceGeometry([str(i) for i in range(npts)], lines, meta)
