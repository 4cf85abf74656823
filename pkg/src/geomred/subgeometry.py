"""F_q-subgeometries of PG(n, q^(s+1)) generated by a lattice of vectors."""

from __future__ import annotations

import logging

from .field import SubfieldEmbedding
from .projective import (Subspace, lin_comb, mat_vec, matrix_inverse, normalize,
                         normalized_combinations, rank)

log = logging.getLogger(__name__)


class Subgeometry:
    """Points are the classes of nonzero GF(q)-combinations of ``gens``.

    Two subgeometries are equal iff their point sets are equal.
    """

    def __init__(self, emb: SubfieldEmbedding, gens):
        gens = tuple(tuple(g) for g in gens)
        if not gens:
            raise ValueError("a subgeometry needs at least one generator")
        length = len(gens[0])
        if any(len(g) != length for g in gens):
            raise ValueError("generators of different lengths")
        big = emb.big
        if rank(big, gens, length) != len(gens):
            raise ValueError("generators are linearly dependent")
        self.emb = emb
        self.gens = gens
        self.n = length - 1
        self.dim = len(gens) - 1
        img = [emb(c) for c in emb.small.elements()]
        points = []
        reps = {}
        for c in normalized_combinations(emb.small.order, len(gens)):
            v = lin_comb(big, [img[x] for x in c], gens, length)
            P = normalize(big, v)
            points.append(P)
            reps[P] = tuple(v)
        self.points = tuple(points)
        self.point_set = frozenset(points)
        self._reps = reps

    @property
    def q(self) -> int:
        return self.emb.small.order

    def lattice_vector(self, P):
        """The GF(q)-combination of the generators representing P."""
        return self._reps[P]

    def span(self) -> Subspace:
        return Subspace.span_of(self.emb.big, self.n, self.gens)

    def __contains__(self, P) -> bool:
        return P in self.point_set

    def __len__(self):
        return len(self.points)

    def __eq__(self, other):
        return (isinstance(other, Subgeometry) and self.n == other.n
                and self.emb.big == other.emb.big and self.point_set == other.point_set)

    def __hash__(self):
        return hash((self.n, self.point_set))

    def __repr__(self):
        return f"Subgeometry(dim={self.dim}, n={self.n}, q={self.q}, gens={self.gens})"


def canonical_subgeometry(emb: SubfieldEmbedding, d: int, n: int) -> Subgeometry:
    """Generated by e_0, ..., e_d inside PG(n, Q)."""
    return Subgeometry(emb, [tuple(int(i == j) for j in range(n + 1)) for i in range(d + 1)])


def subline_in(C: Subgeometry, Q, R) -> Subgeometry:
    if Q == R:
        raise ValueError("Q and R must be distinct")
    if Q not in C or R not in C:
        raise ValueError("Q and R must be points of C")
    return Subgeometry(C.emb, [C.lattice_vector(Q), C.lattice_vector(R)])


def subgeo_extend(C: Subgeometry, w) -> Subgeometry:
    return Subgeometry(C.emb, list(C.gens) + [tuple(w)])


def coset_representatives(emb: SubfieldEmbedding) -> list[int]:
    """Representatives of GF(Q)* / GF(q)*: powers g^0 .. g^(m-1), m = (Q-1)/(q-1)."""
    big = emb.big
    m = (big.order - 1) // (emb.small.order - 1)
    return [big.pow(big.generator, i) for i in range(m)]


def lines_of_Y_through(C: Subgeometry, sigma: Subspace, P) -> list[Subgeometry]:
    """All subgeometries B of dimension dim(C)+1 with C ⊆ B and P ∈ B."""
    if sigma.contains_vector(P):
        raise ValueError("P lies in the hyperplane at infinity")
    big = C.emb.big
    found = {}
    for mu in coset_representatives(C.emb):
        B = subgeo_extend(C, [big.mul(mu, x) for x in P])
        if B.point_set in found:
            log.warning("two scalar cosets give the same subgeometry through %s (mu=%s)", P, mu)
            continue
        found[B.point_set] = B
    return list(found.values())


def canonical_position(C: Subgeometry):
    """A matrix M sending the generators of C to e_0, ..., e_d.

    The columns of M^-1 are the generators followed by standard basis vectors
    completing them to a basis, so M also sends span(C) to the coordinate
    subspace spanned by e_0, ..., e_d.
    """
    big = C.emb.big
    cols = list(C.gens)
    for i in range(C.n + 1):
        if len(cols) == C.n + 1:
            break
        e = tuple(int(i == j) for j in range(C.n + 1))
        if rank(big, cols + [e], C.n + 1) == len(cols) + 1:
            cols.append(e)
    G = [[cols[j][i] for j in range(C.n + 1)] for i in range(C.n + 1)]
    return matrix_inverse(big, G)


def transform(C: Subgeometry, M) -> Subgeometry:
    return Subgeometry(C.emb, [mat_vec(C.emb.big, M, g) for g in C.gens])
