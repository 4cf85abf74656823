"""Finite fields GF(p^e) with integer-encoded elements.

An element is the integer ``sum(c[i] * p**i)`` of its coefficient vector
``c`` (low degree first) modulo the field's defining polynomial. Element
ordering everywhere is plain integer order on this encoding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

DEFAULT_CAP = 2**20
# Dense add/mul tables are built up to this order; linear algebra needs them.
TABLE_CAP = 1024


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, a) with q == p**a, or raise FieldError."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    fs = prime_factors(q)
    if len(fs) != 1:
        raise FieldError(f"{q} is not a prime power")
    p = fs[0]
    a = 0
    while q > 1:
        q //= p
        a += 1
    return p, a


# -- polynomials over Z_p, coefficient lists low degree first --------------

def _trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mod(f, g, p):
    f = _trim(f)
    g = _trim(g)
    inv_lead = pow(g[-1], -1, p)
    while len(f) >= len(g):
        c = (f[-1] * inv_lead) % p
        shift = len(f) - len(g)
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gi) % p
        f = _trim(f)
    return f


def _poly_mulmod(a, b, f, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_mod(out, f, p)


def _poly_powmod(a, k, f, p):
    result = [1]
    base = _poly_mod(a, f, p)
    while k:
        if k & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        k >>= 1
    return result


def is_irreducible(f, p) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f) / 2."""
    f = _trim(f)
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(f, list(low) + [1], p):
                return False
    return True


def _is_primitive(f, p) -> bool:
    deg = len(f) - 1
    n = p**deg - 1
    x = [0, 1] if deg > 1 else [(-f[0]) % p]
    if _poly_powmod(x, n, f, p) != [1]:
        return False
    return all(_poly_powmod(x, n // r, f, p) != [1] for r in prime_factors(n))


def least_primitive_polynomial(p: int, e: int) -> tuple[int, ...]:
    """Least monic primitive polynomial of degree e over Z_p.

    Candidates are ordered by their low-degree-first coefficient tuples.
    """
    for low in itertools.product(range(p), repeat=e):
        f = list(low) + [1]
        if low[0] == 0:
            continue
        if is_irreducible(f, p) and _is_primitive(f, p):
            return tuple(f)
    raise FieldError(f"no primitive polynomial of degree {e} over GF({p})")


# -- fields ----------------------------------------------------------------

class FieldCtx:
    """GF(p^e). Immutable after construction.

    Elements are ints in ``range(order)``; 0 and 1 are the field's zero and one.
    """

    def __init__(self, p: int, e: int, cap: int = DEFAULT_CAP):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if e < 1:
            raise FieldError("extension degree must be >= 1")
        if p**e > cap:
            raise FieldError(f"field order {p}^{e} exceeds cap {cap}")
        self.p = p
        self.e = e
        self.order = p**e
        self.modulus = least_primitive_polynomial(p, e)
        if not is_irreducible(self.modulus, p):
            raise FieldError("modulus is reducible")
        self._exp, self._log = self._power_tables()
        self.generator = self._exp[1 % (self.order - 1)]
        self.add_table = self.mul_table = self.neg_table = self.inv_table = None
        if self.order <= TABLE_CAP:
            self._build_tables()

    def _power_tables(self):
        p, e, N = self.p, self.e, self.order
        f = self.modulus
        exp = [0] * (N - 1)
        log = [None] * N
        if e == 1:
            g = (-f[0]) % p
            x = 1
            for k in range(N - 1):
                exp[k] = x
                x = (x * g) % p
        else:
            c = [1] + [0] * (e - 1)
            for k in range(N - 1):
                exp[k] = sum(ci * p**i for i, ci in enumerate(c))
                # multiply by x, then reduce x^e = -(f_0 + ... + f_{e-1} x^{e-1})
                top = c[-1]
                c = [0] + c[:-1]
                if top:
                    c = [(ci - top * fi) % p for ci, fi in zip(c, f[:e])]
        for k, a in enumerate(exp):
            if log[a] is not None:
                raise FieldError("generator does not have full order")
            log[a] = k
        return exp, log

    def _build_tables(self):
        p, N = self.p, self.order
        elems = np.arange(N)
        if p == 2:
            add = np.bitwise_xor.outer(elems, elems)
        else:
            add = np.zeros((N, N), dtype=np.int64)
            for i in range(self.e):
                di = (elems // p**i) % p
                add += ((di[:, None] + di[None, :]) % p) * p**i
        log = np.array([0] + self._log[1:], dtype=np.int64)
        exp = np.array(self._exp, dtype=np.int64)
        mul = exp[(log[:, None] + log[None, :]) % (N - 1)]
        mul[0, :] = 0
        mul[:, 0] = 0
        self.add_table = add.tolist()
        self.mul_table = mul.tolist()
        self.neg_table = np.argmax(add == 0, axis=1).tolist()
        self.inv_table = [0] + [self._exp[(-self._log[a]) % (N - 1)] for a in range(1, N)]

    # equality by parameters: the modulus is a deterministic function of (p, e)
    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self):
        return hash((self.p, self.e))

    def __repr__(self):
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    def elements(self):
        return range(self.order)

    def coeffs(self, a: int) -> tuple[int, ...]:
        p = self.p
        return tuple((a // p**i) % p for i in range(self.e))

    def from_coeffs(self, c) -> int:
        if len(c) != self.e:
            raise FieldError(f"expected {self.e} coefficients")
        return sum((ci % self.p) * self.p**i for i, ci in enumerate(c))

    def add(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return self.add_table[a][b]
        if self.p == 2:
            return a ^ b
        return self.from_coeffs([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.from_coeffs([-x for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.order - 1)]

    def log(self, a: int) -> int:
        """Discrete log to base ``generator``."""
        if a == 0:
            raise FieldError("log of zero")
        return self._log[a]

    def mult_order(self, a: int) -> int:
        from math import gcd
        return (self.order - 1) // gcd(self.log(a), self.order - 1)

    def eval_poly(self, f, x: int) -> int:
        """Evaluate a polynomial with Z_p coefficients (low degree first) at x."""
        acc = 0
        for c in reversed(f):
            acc = self.add(self.mul(acc, x), c % self.p)
        return acc


@lru_cache(maxsize=None)
def make_field(p: int, e: int = 1) -> FieldCtx:
    return FieldCtx(p, e)


def field_of_order(q: int) -> FieldCtx:
    p, a = prime_power(q)
    return make_field(p, a)


@dataclass(frozen=True)
class SubfieldEmbedding:
    small: FieldCtx
    big: FieldCtx
    image_of_small_generator: int
    image: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.image[a]

    def preimage(self, b: int) -> int:
        try:
            return self.image.index(b)
        except ValueError:
            raise FieldError(f"{b} is not in the image of {self.small}") from None

    def in_image(self, b: int) -> bool:
        return b in self.image


@lru_cache(maxsize=None)
def embed(small: FieldCtx, big: FieldCtx) -> SubfieldEmbedding:
    """Embed GF(q) into GF(q^m) by sending small's generator to a root of its modulus.

    The root chosen is the least one in element order.
    """
    if small.p != big.p or big.e % small.e:
        raise FieldError(f"{small} does not embed in {big}")
    for r in big.elements():
        if big.eval_poly(small.modulus, r) == 0:
            break
    else:  # pragma: no cover - guaranteed by field theory
        raise RuntimeError(f"no root of {small.modulus} in {big}")
    image = []
    for a in small.elements():
        acc = 0
        for i, c in enumerate(small.coeffs(a)):
            if c:
                acc = big.add(acc, big.mul(c, big.pow(r, i)))
        image.append(acc)
    g = image[small.generator]
    if len(set(image)) != small.order:
        raise RuntimeError("subfield embedding is not injective")
    return SubfieldEmbedding(small, big, g, tuple(image))
