"""Arithmetic in small finite fields GF(p**e), table-backed for speed."""

from __future__ import annotations

from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def is_prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``n == p**e`` and p prime, or None."""
    if n < 2:
        raise ValueError("n must be at least 2")
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1 if p == 2 else 2
    else:
        return (n, 1)
    e, r = 0, n
    while r % p == 0:
        r //= p
        e += 1
    return (p, e) if r == 1 else None


def factor_prime_powers(n: int) -> tuple[tuple[int, int], ...]:
    """Full prime factorisation of n grouped as ``((p, e), ...)``, p ascending."""
    if n < 2:
        raise ValueError("n must be at least 2")
    out = []
    r, p = n, 2
    while p * p <= r:
        if r % p == 0:
            e = 0
            while r % p == 0:
                r //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if r > 1:
        out.append((r, 1))
    return tuple(out)


def _digits(n: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(n % p)
        n //= p
    return out


def _poly_mod(num, den, p: int) -> list[int]:
    """Remainder of num by monic den; coefficient vectors low-degree-first."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            shift = i - dd
            for j, d in enumerate(den):
                num[shift + j] = (num[shift + j] - c * d) % p
    return num[:dd] or [0]


def poly_is_irreducible(poly, p: int) -> bool:
    """Trial division of a monic polynomial by every monic divisor of degree <= e/2."""
    e = len(poly) - 1
    if e < 1:
        return False
    for d in range(1, e // 2 + 1):
        for low in range(p**d):
            divisor = _digits(low, p, d) + [1]
            if not any(_poly_mod(poly, divisor, p)):
                return False
    return True


def _smallest_modulus(p: int, e: int) -> tuple[int, ...]:
    # degree 1: the convention X - 0, i.e. plain arithmetic mod p
    if e == 1:
        return (0, 1)
    for n in range(p**e):
        cand = _digits(n, p, e) + [1]
        if poly_is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError(f"no irreducible of degree {e} over GF({p})")


class Field:
    """GF(p**e) with elements 0..p**e-1 encoding coefficient vectors as base-p integers.

    Canonical element order is the id order, so element 0 is zero,
    elements 1..p-1 are the prime-field constants, and element p is the
    residue of X.  Addition, multiplication and inverse tables are built
    once up front; verification inner loops dominate runtime, so lookups
    must be cheap.
    """

    def __init__(self, p: int, e: int, modulus: tuple[int, ...]):
        self.p = p
        self.e = e
        self.order = p**e
        self.modulus = tuple(modulus)
        m = self.order
        digits = [_digits(a, p, e) for a in range(m)]
        self._add = [[0] * m for _ in range(m)]
        self._mul = [[0] * m for _ in range(m)]
        for a in range(m):
            da = digits[a]
            for b in range(a, m):
                db = digits[b]
                s = self._encode([(x + y) % p for x, y in zip(da, db)])
                self._add[a][b] = s
                self._add[b][a] = s
                prod = [0] * (2 * e - 1)
                for i, x in enumerate(da):
                    if x:
                        for j, y in enumerate(db):
                            prod[i + j] = (prod[i + j] + x * y) % p
                r = _poly_mod(prod, self.modulus, p) if len(prod) >= len(modulus) else prod
                v = self._encode(r)
                self._mul[a][b] = v
                self._mul[b][a] = v
        self._inv: list[int | None] = [None] * m
        for a in range(1, m):
            row = self._mul[a]
            for b in range(1, m):
                if row[b] == 1:
                    self._inv[a] = b
                    break

    def _encode(self, digs) -> int:
        n = 0
        for d in reversed(list(digs)):
            n = n * self.p + d
        return n

    def element_digits(self, a: int) -> tuple[int, ...]:
        self._check(a)
        return tuple(_digits(a, self.p, self.e))

    def canonical_elements(self) -> tuple[int, ...]:
        return tuple(range(self.order))

    def _check(self, a: int) -> None:
        if not 0 <= a < self.order:
            raise ValueError(f"element {a} out of range 0..{self.order - 1}")

    def add(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        return self._add[a][b]

    def neg(self, a: int) -> int:
        self._check(a)
        return self._encode([(-d) % self.p for d in _digits(a, self.p, self.e)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ValueError("zero has no inverse")
        return self._inv[a]  # type: ignore[return-value]

    def eval_poly(self, coeffs, point: int) -> int:
        """Horner evaluation; ``coeffs`` is low-degree-first."""
        self._check(point)
        coeffs = tuple(coeffs)
        for c in coeffs:
            self._check(c)
        acc = 0
        for c in reversed(coeffs):
            acc = self._add[self._mul[acc][point]][c]
        return acc

    def __repr__(self) -> str:
        return f"GF({self.order})"


@lru_cache(maxsize=None)
def make_field(m: int) -> Field:
    pe = is_prime_power(m)
    if pe is None:
        raise ValueError(f"{m} is not a prime power")
    p, e = pe
    return Field(p, e, _smallest_modulus(p, e))


def leading_coeff(coeffs, t: int) -> int:
    """Coefficient of X**(t-1) in a polynomial of degree at most t-1."""
    coeffs = tuple(coeffs)
    if any(coeffs[i] for i in range(t, len(coeffs))):
        raise ValueError(f"polynomial degree exceeds {t - 1}")
    return coeffs[t - 1] if len(coeffs) >= t else 0
