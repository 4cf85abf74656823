"""Subspaces of PG(n, q) in canonical reduced row-echelon form.

Points are plain tuples of field elements normalized so that the first
nonzero coordinate is 1. A ``Subspace`` stores the RREF basis of its
underlying vector space, so equality of subspaces is equality of matrices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .field import FieldCtx

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """An enumeration would produce more objects than the configured budget."""

    def __init__(self, what: str, count: int, budget: int, counts: dict | None = None):
        self.what = what
        self.count = count
        self.budget = budget
        self.counts = counts or {what: count}
        super().__init__(f"{what}: {count} exceeds budget {budget}")


class AmbientMismatch(ValueError):
    pass


def _tables(F: FieldCtx):
    if F.add_table is None:
        raise ValueError(f"{F} is too large for table-driven linear algebra")
    return F.add_table, F.mul_table, F.neg_table, F.inv_table


def rref(F: FieldCtx, rows, ncols: int):
    """Row-reduce ``rows``; return (nonzero RREF rows, pivot columns)."""
    add, mul, neg, inv = _tables(F)
    M = [list(r) for r in rows]
    pivots = []
    r0 = 0
    nrows = len(M)
    for c in range(ncols):
        if r0 == nrows:
            break
        for r in range(r0, nrows):
            if M[r][c]:
                break
        else:
            continue
        M[r0], M[r] = M[r], M[r0]
        prow = M[r0]
        lead = prow[c]
        if lead != 1:
            scale = mul[inv[lead]]
            prow = [scale[x] for x in prow]
            M[r0] = prow
        for r in range(nrows):
            if r != r0:
                f = M[r][c]
                if f:
                    nf = mul[neg[f]]
                    M[r] = [add[a][nf[b]] for a, b in zip(M[r], prow)]
        pivots.append(c)
        r0 += 1
    return tuple(tuple(r) for r in M[:r0]), tuple(pivots)


def rank(F: FieldCtx, rows, ncols: int) -> int:
    return len(rref(F, rows, ncols)[1])


def reduce_vector(F: FieldCtx, basis, pivots, v):
    """Reduce v against an RREF basis; the result is zero iff v lies in the row space."""
    add, mul, neg, _ = _tables(F)
    v = list(v)
    for row, c in zip(basis, pivots):
        f = v[c]
        if f:
            nf = mul[neg[f]]
            v = [add[a][nf[b]] for a, b in zip(v, row)]
    return v


def normalize(F: FieldCtx, v) -> tuple[int, ...]:
    """Scale v so that its first nonzero coordinate is 1."""
    for x in v:
        if x:
            if x == 1:
                return tuple(v)
            s = F.inv(x)
            return tuple(F.mul(s, y) for y in v)
    raise ValueError("zero vector has no projective point")


def lin_comb(F: FieldCtx, coeffs, vectors, length: int) -> list[int]:
    add, mul = F.add_table, F.mul_table
    out = [0] * length
    for c, v in zip(coeffs, vectors):
        if c:
            mc = mul[c]
            out = [add[a][mc[b]] for a, b in zip(out, v)]
    return out


def normalized_combinations(q: int, k: int):
    """Coefficient vectors of length k over range(q) with leading nonzero entry 1.

    Ordered by the position of the leading 1, then lexicographically.
    """
    for lead in range(k):
        for tail in itertools.product(range(q), repeat=k - lead - 1):
            yield (0,) * lead + (1,) + tail


@dataclass(frozen=True)
class Subspace:
    field: FieldCtx
    n: int
    rows: tuple
    pivots: tuple = dc_field(compare=False, hash=False, repr=False)

    @classmethod
    def span_of(cls, F: FieldCtx, n: int, vectors) -> "Subspace":
        vectors = list(vectors)
        for v in vectors:
            if len(v) != n + 1:
                raise AmbientMismatch(f"vector of length {len(v)} in PG({n},{F.order})")
        rows, piv = rref(F, vectors, n + 1)
        return cls(F, n, rows, piv)

    @classmethod
    def empty(cls, F: FieldCtx, n: int) -> "Subspace":
        return cls(F, n, (), ())

    @classmethod
    def whole(cls, F: FieldCtx, n: int) -> "Subspace":
        return cls.span_of(F, n, [tuple(int(i == j) for j in range(n + 1)) for i in range(n + 1)])

    @classmethod
    def point(cls, F: FieldCtx, coords) -> "Subspace":
        return cls.span_of(F, len(coords) - 1, [coords])

    @property
    def pdim(self) -> int:
        return len(self.rows) - 1

    @property
    def rank(self) -> int:
        return len(self.rows)

    def label(self) -> str:
        return ";".join(",".join(map(str, r)) for r in self.rows)

    def coordinates(self, v) -> tuple[int, ...]:
        """Coordinates of a vector of this subspace with respect to its RREF rows."""
        return tuple(v[c] for c in self.pivots)

    def contains_vector(self, v) -> bool:
        return not any(reduce_vector(self.field, self.rows, self.pivots, v))

    def __contains__(self, pt) -> bool:
        return self.contains_vector(pt)

    def __repr__(self):
        return f"Subspace(PG({self.n},{self.field.order}), pdim={self.pdim}, rows={self.rows})"


def _check(A: Subspace, B: Subspace):
    if A.n != B.n or A.field != B.field:
        raise AmbientMismatch(f"PG({A.n},{A.field.order}) vs PG({B.n},{B.field.order})")


def pdim(A: Subspace) -> int:
    return A.pdim


def span(*spaces: Subspace) -> Subspace:
    A = spaces[0]
    for B in spaces[1:]:
        _check(A, B)
    return Subspace.span_of(A.field, A.n, [r for S in spaces for r in S.rows])


def dual(A: Subspace) -> Subspace:
    """Annihilator of A under the standard dot product."""
    F, n = A.field, A.n
    free = [c for c in range(n + 1) if c not in A.pivots]
    vecs = []
    for f in free:
        y = [0] * (n + 1)
        y[f] = 1
        for row, c in zip(A.rows, A.pivots):
            y[c] = F.neg(row[f])
        vecs.append(y)
    return Subspace.span_of(F, n, vecs)


def meet(A: Subspace, B: Subspace) -> Subspace:
    _check(A, B)
    if not A.rows or not B.rows:
        return Subspace.empty(A.field, A.n)
    return dual(span(dual(A), dual(B)))


def contains(A: Subspace, B: Subspace) -> bool:
    """True iff B is a subspace of A."""
    _check(A, B)
    return all(A.contains_vector(r) for r in B.rows)


def is_disjoint(A: Subspace, B: Subspace) -> bool:
    _check(A, B)
    return rank(A.field, A.rows + B.rows, A.n + 1) == A.rank + B.rank


def meet_pdim(A: Subspace, B: Subspace) -> int:
    """pdim of A ∩ B via Grassmann's identity (cheaper than ``meet``)."""
    _check(A, B)
    return A.pdim + B.pdim - (rank(A.field, A.rows + B.rows, A.n + 1) - 1)


def points_of(A: Subspace) -> list[tuple[int, ...]]:
    if not A.rows:
        raise ValueError("the empty subspace has no points")
    F = A.field
    return [tuple(lin_comb(F, c, A.rows, A.n + 1))
            for c in normalized_combinations(F.order, A.rank)]


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional vector subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def count_subspaces(n: int, q: int, k: int) -> int:
    """Number of projective k-spaces of PG(n, q)."""
    return gaussian_binomial(n + 1, k + 1, q)


def enumerate_subspaces(F: FieldCtx, n: int, k: int, budget: int = DEFAULT_BUDGET) -> list[Subspace]:
    """All k-dimensional subspaces of PG(n, q), one RREF matrix per subspace."""
    count = count_subspaces(n, F.order, k)
    if count > budget:
        raise BudgetExceeded(f"{k}-spaces of PG({n},{F.order})", count, budget)
    if k == -1:
        return [Subspace.empty(F, n)]
    r, width, q = k + 1, n + 1, F.order
    out = []
    for piv in itertools.combinations(range(width), r):
        slots = [(i, c) for i in range(r) for c in range(piv[i] + 1, width) if c not in piv]
        for vals in itertools.product(range(q), repeat=len(slots)):
            M = [[0] * width for _ in range(r)]
            for i, c in enumerate(piv):
                M[i][c] = 1
            for (i, c), x in zip(slots, vals):
                M[i][c] = x
            out.append(Subspace(F, n, tuple(tuple(row) for row in M), piv))
    return out


def count_disjoint_spaces(s: int, t: int, q: int) -> int:
    """Number of (t-1)-spaces of PG(s+t, q) disjoint from a fixed s-space."""
    if s < 0 or t < 1:
        raise ValueError("need s >= 0 and t >= 1")
    return q ** (s * t + t)


def coordinate_subspace(F: FieldCtx, n: int, cols) -> Subspace:
    return Subspace.span_of(F, n, [tuple(int(j == c) for j in range(n + 1)) for c in cols])


def matrix_inverse(F: FieldCtx, M):
    """Inverse of a square matrix (list of rows) over F."""
    size = len(M)
    aug = [list(row) + [int(i == j) for j in range(size)] for i, row in enumerate(M)]
    rows, piv = rref(F, aug, 2 * size)
    if piv[:size] != tuple(range(size)) or len(piv) < size:
        raise ValueError("matrix is singular")
    return [list(r[size:]) for r in rows[:size]]


def mat_vec(F: FieldCtx, M, v) -> tuple[int, ...]:
    add, mul = F.add_table, F.mul_table
    out = []
    for row in M:
        acc = 0
        for a, b in zip(row, v):
            if a and b:
                acc = add[acc][mul[a][b]]
        out.append(acc)
    return tuple(out)
