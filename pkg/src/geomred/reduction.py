"""Field reduction PG(t, q^(s+1)) -> PG(st+s+t, q).

A vector over GF(q^(s+1)) of length t+1 is expanded coordinate by coordinate
over the power basis (1, a, ..., a^s) of GF(q^(s+1)) over GF(q), where a is
the big field's generator. Coordinate j of the big vector occupies block j
(width s+1) of the expanded vector.
"""

from __future__ import annotations

import itertools

from .field import embed, make_field, prime_power
from .projective import Subspace, rank


class ReductionMap:
    def __init__(self, q: int, s: int, t: int):
        if s < 0 or t < 0:
            raise ValueError("need s >= 0 and t >= 0")
        p, a = prime_power(q)
        self.q, self.s, self.t = q, s, t
        self.small = make_field(p, a)
        self.big = make_field(p, a * (s + 1))
        self.emb = embed(self.small, self.big)
        big = self.big
        self.alpha = big.generator
        self.basis = tuple(big.pow(self.alpha, i) for i in range(s + 1))
        self._coords = {}
        for c in itertools.product(self.small.elements(), repeat=s + 1):
            x = 0
            for ci, b in zip(c, self.basis):
                x = big.add(x, big.mul(self.emb(ci), b))
            self._coords.setdefault(x, c)
        if len(self._coords) != big.order:
            raise RuntimeError("power basis is not GF(q)-independent")
        self.width = s + 1
        self.n_small = (s + 1) * (t + 1) - 1

    def __repr__(self):
        return f"ReductionMap(q={self.q}, s={self.s}, t={self.t})"

    def coords(self, x: int) -> tuple[int, ...]:
        """GF(q)-coordinates of a big-field element over the power basis."""
        return self._coords[x]

    def expand(self, v) -> tuple[int, ...]:
        if len(v) != self.t + 1:
            raise ValueError(f"expected a vector of length {self.t + 1}")
        return tuple(c for x in v for c in self._coords[x])

    def _generators(self, vectors):
        mul = self.big.mul
        return [self.expand([mul(b, x) for x in v]) for v in vectors for b in self.basis]

    def point(self, P) -> Subspace:
        return Subspace.span_of(self.small, self.n_small, self._generators([P]))

    def subspace(self, kappa: Subspace) -> Subspace:
        if kappa.field != self.big or kappa.n != self.t:
            raise ValueError(f"{kappa!r} is not a subspace of PG({self.t},{self.big.order})")
        return Subspace.span_of(self.small, self.n_small, self._generators(kappa.rows))

    def pointset(self, points) -> list[Subspace]:
        return [self.point(P) for P in points]

    def is_injective_on_vectors(self) -> bool:
        """expand is injective iff the expanded standard basis has full GF(q)-rank."""
        vecs = [tuple(int(i == j) for j in range(self.t + 1)) for i in range(self.t + 1)]
        return rank(self.small, self._generators(vecs), self.n_small + 1) == self.n_small + 1


def extend_by_zero_block(m: ReductionMap, A: Subspace, blocks: int = 1) -> Subspace:
    """Embed a subspace of the image of m into the image of a map with ``blocks`` more coordinates."""
    pad = (0,) * (m.width * blocks)
    return Subspace.span_of(A.field, A.n + len(pad), [r + pad for r in A.rows])
