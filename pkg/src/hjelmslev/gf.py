"""Finite field arithmetic F_q, q = p^r, with deterministic construction.

Elements are encoded as integers in range(q): the code of an element is the
base-p encoding of its coefficient vector with respect to the power basis
1, x, ..., x^(r-1), so 0 -> 0 and 1 -> 1 always.

The defining polynomial is chosen deterministically per (p, r): the monic
primitive polynomial of degree r over F_p whose non-leading coefficient
vector (c_0, ..., c_{r-1}) has the smallest base-p integer encoding.  This
makes element codes reproducible across runs and machines.  For r = 1 the
field is Z_p and x stands for the smallest primitive root mod p.

Multiplication uses exp/log tables over the primitive element x, addition
is a q*q table built digit-wise; both are cheap for the desk-scale fields
(q <= 256) this library targets.
"""

from __future__ import annotations

from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_mulmod(a, b, modulus, p):
    """Multiply coefficient lists a*b mod (modulus, p); modulus is monic."""
    r = len(modulus) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    for i in range(len(out) - 1, r - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(r):
                out[i - r + j] = (out[i - r + j] - c * modulus[j]) % p
    out = out[:r]
    while len(out) < r:
        out.append(0)
    return out


def _smallest_primitive_root(p: int) -> int:
    """Smallest primitive root mod p (p prime)."""
    if p == 2:
        return 1
    order = p - 1
    factors = []
    n, d = order, 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    for g in range(2, p):
        if all(pow(g, order // f, p) != 1 for f in factors):
            return g
    raise AssertionError("no primitive root found")


def _find_primitive_poly(p: int, r: int) -> tuple[int, ...]:
    """Lex-least monic primitive polynomial of degree r over F_p.

    Returned as the tuple (c_0, ..., c_{r-1}) of non-leading coefficients.
    Primitivity (x generates the multiplicative group) is tested directly
    by iterating powers of x; fine for q <= 2^16.
    """
    q = p**r
    for code in range(p**r):
        coeffs = [(code // p**i) % p for i in range(r)]
        if coeffs[0] == 0:
            continue  # x | f, not irreducible
        modulus = coeffs + [1]
        # walk powers of x; primitive iff the orbit has size q-1
        x = [0] * r
        x[min(1, r - 1)] = 1 if r > 1 else 0
        if r == 1:
            # f = x + c0, so x = -c0 in Z_p
            elt = (-coeffs[0]) % p
            seen = 1
            acc = elt
            while acc != 1:
                if acc == 0:
                    break
                acc = (acc * elt) % p
                seen += 1
                if seen > q:
                    break
            if elt != 0 and seen == q - 1:
                return tuple(coeffs)
            continue
        acc = x[:]
        seen = 1
        one = [1] + [0] * (r - 1)
        while acc != one:
            acc = _poly_mulmod(acc, x, modulus, p)
            seen += 1
            if seen > q:
                break
        if seen == q - 1:
            return tuple(coeffs)
    raise ValueError(f"no primitive polynomial of degree {r} over F_{p}")


class GF:
    """The finite field F_q with table-based arithmetic on integer codes."""

    def __init__(self, p: int, r: int):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if r < 1:
            raise ValueError(f"r = {r} must be positive")
        q = p**r
        if q > 2**16:
            raise ValueError(f"field size {q} exceeds the 2^16 limit")
        self.p = p
        self.r = r
        self.q = q
        self.poly = _find_primitive_poly(p, r)

        # exp/log tables over the primitive element.
        if r == 1:
            gen = _smallest_primitive_root(p)
        else:
            gen = p  # the element x
        self.generator = gen
        exp = [1] * (q - 1)
        log = [0] * q
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            log[acc] = i
            acc = self._mul_slow(acc, gen)
        if acc != 1:
            raise AssertionError("generator does not have order q-1")
        self._exp = exp
        self._log = log

        self._add = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
        self._neg = [self._add[a].index(0) for a in range(q)]

    # -- slow reference ops used only to build tables --------------------

    def _digits(self, a):
        return [(a // self.p**i) % self.p for i in range(self.r)]

    def _undigits(self, ds):
        return sum(d * self.p**i for i, d in enumerate(ds))

    def _add_slow(self, a, b):
        p = self.p
        return self._undigits([(x + y) % p for x, y in zip(self._digits(a), self._digits(b))])

    def _mul_slow(self, a, b):
        if self.r == 1:
            return (a * b) % self.p
        modulus = list(self.poly) + [1]
        return self._undigits(_poly_mulmod(self._digits(a), self._digits(b), modulus, self.p))

    # -- public arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e > 0 else 1
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def frobenius(self, a: int, s: int = 1) -> int:
        """a -> a^(p^s)."""
        return self.pow(a, self.p ** (s % self.r))

    def elements(self):
        return range(self.q)

    def __repr__(self):
        return f"GF({self.p}^{self.r})" if self.r > 1 else f"GF({self.p})"


@lru_cache(maxsize=None)
def gf(p: int, r: int = 1) -> GF:
    """Cached field constructor; fields are immutable so sharing is safe."""
    return GF(p, r)
