"""The map phi: tau -> F(tau)^d ∩ chi^d and the exhaustive check that it maps Y(s,t,q) onto X(s,t,q)."""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field

from .chi import ChiConstructionError, ChiResult, chi_algebraic, chi_inductive, verify_chi
from .geometries import build_X, build_Y, y_setup
from .projective import (DEFAULT_BUDGET, BudgetExceeded, Subspace, contains,
                         count_subspaces, dual, is_disjoint, meet, meet_pdim, span)
from .reduction import ReductionMap, extend_by_zero_block
from .regulus import is_regulus
from .subgeometry import Subgeometry, canonical_position, transform

CONSTRUCTIONS = ("inductive", "algebraic", "both")
MAX_WITNESSES = 5


@dataclass
class PhiContext:
    m: ReductionMap
    sigma: Subspace
    C: Subgeometry
    chi_result: ChiResult
    chi: Subspace          # inside PG(st+s+t, q)
    chi_dual: Subspace
    sigma_image_dual: Subspace   # F(Sigma)^d
    pi: Subspace           # F(Sigma)^d in chi^d coordinates

    @property
    def params(self):
        return self.m.q, self.m.s, self.m.t


def restrict_to_sigma(C: Subgeometry) -> Subgeometry:
    """Drop the last coordinate of a subgeometry lying in X_t = 0."""
    if any(g[-1] for g in C.gens):
        raise ValueError("C does not lie in the hyperplane X_t = 0")
    return Subgeometry(C.emb, [g[:-1] for g in C.gens])


def build_chi(C: Subgeometry, m_sigma: ReductionMap, construction: str) -> ChiResult:
    if construction == "inductive":
        return chi_inductive(C, m_sigma)
    if construction == "algebraic":
        return chi_algebraic(C, m_sigma)
    raise ValueError(f"unknown construction {construction!r}")


def make_context(q: int, s: int, t: int, construction: str = "inductive",
                 sigma: Subspace | None = None, C: Subgeometry | None = None,
                 chi_result: ChiResult | None = None) -> PhiContext:
    if t < 1:
        raise ValueError("t must be >= 1")
    if sigma is None or C is None:
        sigma, C = y_setup(s, t, q)
    m = ReductionMap(q, s, t)
    m_sigma = ReductionMap(q, s, t - 1)
    if chi_result is None:
        chi_result = build_chi(restrict_to_sigma(C), m_sigma, construction)
    chi = extend_by_zero_block(m_sigma, chi_result.chi)
    chi_dual = dual(chi)
    sig_dual = dual(m.subspace(sigma))
    pi = to_chi_coords(chi_dual, sig_dual)
    return PhiContext(m, sigma, C, chi_result, chi, chi_dual, sig_dual, pi)


def to_chi_coords(chi_dual: Subspace, W: Subspace) -> Subspace:
    """Re-express a subspace of chi^d in the coordinates of chi^d's RREF basis."""
    return Subspace.span_of(chi_dual.field, chi_dual.pdim,
                            [chi_dual.coordinates(r) for r in W.rows])


def phi_full(ctx: PhiContext, tau: Subspace) -> Subspace:
    return meet(dual(ctx.m.subspace(tau)), ctx.chi_dual)


def phi(ctx: PhiContext, tau: Subspace) -> Subspace:
    return to_chi_coords(ctx.chi_dual, phi_full(ctx, tau))


def phi_point_full(ctx: PhiContext, P) -> Subspace:
    return meet(dual(ctx.m.point(P)), ctx.chi_dual)


def phi_point(ctx: PhiContext, P) -> Subspace:
    if ctx.sigma.contains_vector(P):
        raise ValueError("P lies in Sigma; use phi for such subspaces")
    return to_chi_coords(ctx.chi_dual, phi_point_full(ctx, P))


# -- certificates -------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool = True
    count: int = 0
    witnesses: list = field(default_factory=list)

    def record(self, ok: bool, witness=None):
        self.count += 1
        if not ok:
            self.passed = False
            if len(self.witnesses) < MAX_WITNESSES and witness is not None:
                self.witnesses.append(witness)

    def as_dict(self):
        return {"name": self.name, "pass": self.passed, "count": self.count,
                "witnesses": self.witnesses}


@dataclass
class IsoCertificate:
    params: dict
    chi: dict
    checks: list
    point_map: list
    line_map: list
    counts: dict = field(default_factory=dict)
    alternates: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list:
        return [c for c in self.checks if not c.passed]

    def as_dict(self):
        return {
            "params": self.params,
            "chi": self.chi,
            "alternate_chi": self.alternates,
            "checks": [c.as_dict() for c in self.checks],
            "counts": self.counts,
            "point_map": self.point_map,
            "line_map": self.line_map,
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=1) + "\n"


def trace_digest(trace) -> str:
    return hashlib.sha256(json.dumps(trace, sort_keys=True).encode()).hexdigest()


def chi_summary(res: ChiResult) -> dict:
    return {"tag": res.construction, "pdim": res.chi.pdim,
            "basis": [list(r) for r in res.chi.rows], "trace_digest": trace_digest(res.trace)}


def projected_counts(q: int, s: int, t: int) -> dict:
    Q = q ** (s + 1)
    npts = q ** (s * t + t)
    nlines_x = count_subspaces(s + t, q, t)
    return {
        "big field order": Q,
        "Y points": npts,
        "Y subgeometry candidates": npts * (Q - 1) // (q - 1),
        "X candidate points ((t-1)-spaces)": count_subspaces(s + t, q, t - 1),
        "X candidate lines (t-spaces)": nlines_x,
        "X line membership tests": nlines_x * npts,
    }


# Table-driven arithmetic caps the big field independently of the budget.
MAX_FIELD_ORDER = 1024


def check_budget(q: int, s: int, t: int, budget: int = DEFAULT_BUDGET) -> dict:
    counts = projected_counts(q, s, t)
    if counts["big field order"] > MAX_FIELD_ORDER:
        raise BudgetExceeded("big field order", counts["big field order"], MAX_FIELD_ORDER, counts)
    for what, c in counts.items():
        if what != "big field order" and c > budget:
            raise BudgetExceeded(what, c, budget, counts)
    return counts


def canonicalize(s: int, t: int, q: int, C: Subgeometry):
    """Move a user-supplied (t-1)-dim subgeometry C to canonical position.

    Returns (sigma, canonical C, matrix). The matrix is the projectivity applied.
    """
    M = canonical_position(C)
    C2 = transform(C, M)
    sigma, C_can = y_setup(s, t, q)
    if C2 != C_can:
        raise ValueError("projectivity failed to reach canonical position")
    return sigma, C_can, M


def verify_isomorphism(q: int, s: int, t: int, construction: str = "both", seed: int = 0,
                       budget: int = DEFAULT_BUDGET, psi_samples: int = 8,
                       C: Subgeometry | None = None) -> IsoCertificate:
    if construction not in CONSTRUCTIONS:
        raise ValueError(f"construction must be one of {CONSTRUCTIONS}")
    counts = check_budget(q, s, t, budget)
    params = {"q": q, "s": s, "t": t, "construction": construction, "seed": seed}
    checks = []

    if C is not None:
        sigma, C, M = canonicalize(s, t, q, C)
        params["canonicalizing_matrix"] = [list(r) for r in M]
    else:
        sigma, C = y_setup(s, t, q)
    m_sigma = ReductionMap(q, s, t - 1)
    C_sigma = restrict_to_sigma(C)

    tags = ["inductive", "algebraic"] if construction == "both" else [construction]
    results = {}
    for tag in tags:
        chk = Check(f"chi_property[{tag}]")
        try:
            res = build_chi(C_sigma, m_sigma, tag)
        except ChiConstructionError as exc:
            chk.record(False, {"error": str(exc), "trace": exc.trace})
            checks.append(chk)
            continue
        chk.record(res.chi.pdim == s * t - 1, {"pdim": res.chi.pdim})
        for Q, d, ok in verify_chi(res.chi, C_sigma, m_sigma).rows:
            chk.record(ok, {"point": list(Q), "meet_pdim": d})
        checks.append(chk)
        results[tag] = res

    Y = build_Y(s, t, q, sigma, C)
    counts = dict(counts, **{"|P_Y|": len(Y.points), "|L_Y|": len(Y.lines)})
    point_map, line_map = [], []
    primary = None
    for tag in tags:
        if tag not in results:
            continue
        ctx = make_context(q, s, t, sigma=sigma, C=C, chi_result=results[tag])
        rng = random.Random(seed)
        run = verify_context(ctx, Y, rng, psi_samples, budget)
        for chk in run["checks"]:
            chk.name = f"{chk.name}[{tag}]"
        checks.extend(run["checks"])
        if primary is None:
            primary = tag
            point_map, line_map = run["point_map"], run["line_map"]
            counts.update(run["counts"])

    chi_info = chi_summary(results[primary]) if primary else {}
    alternates = [chi_summary(results[t_]) for t_ in tags if t_ in results and t_ != primary]
    return IsoCertificate(params, chi_info, checks, point_map, line_map, counts, alternates)


def verify_context(ctx: PhiContext, Y, rng: random.Random, psi_samples: int = 8,
                   budget: int = DEFAULT_BUDGET) -> dict:
    """Run every check for one chi. Stops after the context check if that fails."""
    q, s, t = ctx.params
    m = ctx.m
    checks = []

    c0 = Check("context")
    c0.record(ctx.chi.pdim == s * t - 1, {"chi_pdim": ctx.chi.pdim})
    c0.record(contains(m.subspace(ctx.sigma), ctx.chi), "chi not inside F(Sigma)")
    c0.record(ctx.chi_dual.pdim == s + t, {"chi_dual_pdim": ctx.chi_dual.pdim})
    c0.record(ctx.pi.pdim == s, {"pi_pdim": ctx.pi.pdim})
    c0.record(phi_full(ctx, ctx.sigma) == ctx.sigma_image_dual, "phi(Sigma) != F(Sigma)^d")
    checks.append(c0)
    if not c0.passed:
        return {"checks": checks, "point_map": [], "line_map": [], "counts": {}}

    X = build_X(s, t, q, ctx.pi, budget)
    x_index = {S: i for i, S in enumerate(X.point_objects)}
    x_line_index = {T: j for j, T in enumerate(X.line_objects)}

    # points
    c1 = Check("point_bijection")
    images = []
    for P in Y.point_objects:
        img = phi_point(ctx, P)
        images.append(img)
        ok = img.pdim == t - 1 and is_disjoint(img, ctx.pi) and img in x_index
        c1.record(ok, {"point": list(P), "image": img.label(), "pdim": img.pdim})
    img_idx = [x_index.get(img) for img in images]
    c1.record(len(set(images)) == len(images), "phi is not injective on P_Y")
    c1.record(len(Y.points) == len(X.points) == q ** (s * t + t),
              {"|P_Y|": len(Y.points), "|P_X|": len(X.points), "expected": q ** (s * t + t)})
    checks.append(c1)
    point_map = [[Y.points[i], images[i].label()] for i in range(len(images))]

    c2 = Check("line_images")
    c3 = Check("maximal_intersection")
    c_ekr = Check("ekr_dichotomy")
    line_map, line_labels = [], []
    for j, ln in enumerate(Y.lines):
        imgs = [images[i] for i in ln]
        T = span(*imgs)
        target = x_line_index.get(T)
        ok = (T.pdim == t and meet_pdim(T, ctx.pi) == 0 and target is not None
              and None not in (img_idx[i] for i in ln)
              and sorted(img_idx[i] for i in ln) == list(X.lines[target]))
        c2.record(ok, {"y_line": j, "span_pdim": T.pdim})
        line_map.append([j, target])
        line_labels.append([" ".join(map(str, ln)),
                            None if target is None else X.line_objects[target].label()])
        for a in range(len(imgs)):
            for b in range(a + 1, len(imgs)):
                d = meet_pdim(imgs[a], imgs[b])
                c3.record(d == t - 2, {"y_line": j, "pair": [ln[a], ln[b]], "meet_pdim": d})
        if t >= 2:
            common = imgs[0]
            for img in imgs[1:]:
                common = meet(common, img)
            c_ekr.record(common.pdim < t - 2, {"y_line": j, "common_pdim": common.pdim})
        else:
            c_ekr.record(_regulus_branch(ctx, Y.line_objects[j]), {"y_line": j})
    if t == 1:
        c_ekr.name = "t1_regulus_collinearity"
    checks.extend([c2, c3, c_ekr])

    c4 = Check("line_map_bijection")
    targets = [x for _, x in line_map]
    c4.record(None not in targets and sorted(targets) == list(range(len(X.lines))),
              {"|L_Y|": len(Y.lines), "|L_X|": len(X.lines),
               "distinct_targets": len(set(targets) - {None})})
    checks.append(c4)

    c5 = Check("incidence_preservation")
    mapped = {(img_idx[i], line_map[j][1]) for (i, j) in Y.incidences()}
    x_inc = X.incidences()
    c5.record(mapped == x_inc, {"missing": len(x_inc - mapped), "extra": len(mapped - x_inc)})
    checks.append(c5)

    c6 = Check("pi_in_phi_of_C")
    for Q in ctx.C.points:
        img = phi_point_full(ctx, Q)
        c6.record(img.pdim == s + t - 1 and contains(img, ctx.sigma_image_dual),
                  {"point": list(Q), "pdim": img.pdim})
    checks.append(c6)

    checks.append(_psi_checks(ctx, Y, rng, psi_samples))
    counts = {"|P_X|": len(X.points), "|L_X|": len(X.lines)}
    return {"checks": checks, "point_map": point_map, "line_map": line_labels, "counts": counts}


def _regulus_branch(ctx: PhiContext, B: Subgeometry) -> bool:
    """t = 1: the duals of F(R), R ∈ B, form a regulus whose transversal through two images carries them all."""
    m = ctx.m
    duals = [dual(m.point(R)) for R in B.points]
    if not is_regulus(duals):
        return False
    affine = [R for R in B.points if R not in ctx.C]
    imgs = [phi_point_full(ctx, R) for R in affine]
    line = span(imgs[0], imgs[1])
    if line.pdim != 1:
        return False
    if any(meet_pdim(line, el) != 0 for el in duals):
        return False
    return all(contains(line, img) for img in imgs)


def _psi_checks(ctx: PhiContext, Y, rng: random.Random, samples: int) -> Check:
    """For affine P1, P2 on a Y-line and Q = P1P2 ∩ Sigma: phi(Q) meets Psi^d in a (t-2)-space."""
    q, s, t = ctx.params
    m = ctx.m
    big = ctx.sigma.field
    chk = Check("psi_sampled")
    picks = rng.sample(range(len(Y.lines)), min(samples, len(Y.lines)))
    for j in picks:
        a, b = rng.sample(list(Y.lines[j]), 2)
        P1, P2 = Y.point_objects[a], Y.point_objects[b]
        Qs = meet(Subspace.span_of(big, t, [P1, P2]), ctx.sigma)
        Q = Qs.rows[0] if Qs.pdim == 0 else None
        if Q is None or Q not in ctx.C:
            continue
        psi = span(m.point(P1), m.point(P2))
        psi_d = dual(psi)
        phiQ = phi_point_full(ctx, Q)
        ok = (psi.pdim == 2 * s + 1 and phiQ.pdim == s + t - 1
              and meet(phiQ, psi_d).pdim == t - 2
              and meet(phi_point_full(ctx, P1), phi_point_full(ctx, P2)).pdim == t - 2)
        chk.record(ok, {"P1": list(P1), "P2": list(P2), "Q": list(Q)})
    return chk
