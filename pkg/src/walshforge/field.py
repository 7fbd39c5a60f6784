"""Exact arithmetic in GF(2^m) with plain-int bitmask elements.

An element is an integer in [0, 2^m) read as a polynomial over GF(2) in the
power basis, reduced modulo an explicit degree-m irreducible ``modulus``
bitmask.  Everything here is deterministic and pure; a :class:`FieldCtx` is
immutable after construction and safe to share across workers.

Scalar multiplication is shift-xor reduction.  For m <= 16 a context lazily
builds log/antilog tables that back both the scalar fast path and the
vectorized bulk helpers; table-backed results are bit-identical to the
shift-xor path (tests cross-check the two).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

MAX_M = 31
TABLE_MAX_M = 16


# ---------------------------------------------------------------------------
# polynomial-over-GF(2) helpers on bare ints (no field context needed)

def _pm_mod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def _pm_mulmod(a: int, b: int, f: int) -> int:
    deg = f.bit_length() - 1
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> deg) & 1:
            a ^= f
    return r


def _pm_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _pm_mod(a, b)
    return a


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _x_pow_2k(f: int, k: int) -> int:
    # x^(2^k) mod f, by k squarings of x
    r = 0b10
    for _ in range(k):
        r = _pm_mulmod(r, r, f)
    return r


def is_irreducible(f: int) -> bool:
    """Rabin test for a GF(2)[x] polynomial given as a bitmask."""
    m = f.bit_length() - 1
    if m < 1 or not f & 1:
        return m == 1 and f == 0b10  # x itself is the only non-odd irreducible
    if _x_pow_2k(f, m) != 0b10:
        return False
    for p in _prime_factors(m):
        if _pm_gcd(_x_pow_2k(f, m // p) ^ 0b10, f) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def default_modulus(m: int) -> int:
    """Smallest irreducible degree-m bitmask (lexicographic by integer value)."""
    if not 2 <= m <= MAX_M:
        raise ValueError(f"m={m} out of supported range [2, {MAX_M}]")
    for cand in range((1 << m) + 1, 1 << (m + 1), 2):
        if is_irreducible(cand):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {m}")  # unreachable


# ---------------------------------------------------------------------------

class FieldCtx:
    """Immutable description of GF(2^m): m, modulus bitmask, trace data."""

    def __init__(self, m: int, modulus: int | None = None):
        if not 2 <= m <= MAX_M:
            raise ValueError(f"m={m} out of supported range [2, {MAX_M}]")
        if modulus is None:
            modulus = default_modulus(m)
        if modulus.bit_length() != m + 1:
            raise ValueError(f"modulus {modulus:#x} does not have degree {m}")
        if not is_irreducible(modulus):
            raise ValueError(f"modulus {modulus:#x} is reducible over GF(2)")
        self.m = m
        self.modulus = modulus
        self.q = 1 << m
        # Tr is GF(2)-linear: precompute the mask with bit i = Tr(2^i), so that
        # trace(x) = parity(popcount(x & mask)).
        mask = 0
        for i in range(m):
            e = 1 << i
            t = 0
            for _ in range(m):
                t ^= e
                e = self.mul_raw(e, e)
            if t not in (0, 1):
                raise AssertionError(f"trace of basis element not in GF(2): {t:#x}")
            mask |= t << i
        self._trace_mask = mask
        self._exp: np.ndarray | None = None
        self._log: np.ndarray | None = None

    def __repr__(self):
        return f"FieldCtx(m={self.m}, modulus={self.modulus:#x})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.m, self.modulus) == (other.m, other.modulus)

    def __hash__(self):
        return hash((self.m, self.modulus))

    # -- scalar operations --------------------------------------------------

    @staticmethod
    def add(x: int, y: int) -> int:
        return x ^ y

    def mul_raw(self, x: int, y: int) -> int:
        """Carryless product reduced by the modulus (shift-xor; table-free)."""
        m, mod, r = self.m, self.modulus, 0
        while y:
            if y & 1:
                r ^= x
            y >>= 1
            x <<= 1
            if (x >> m) & 1:
                x ^= mod
        return r

    def mul(self, x: int, y: int) -> int:
        if self._log is None:
            return self.mul_raw(x, y)
        if x == 0 or y == 0:
            return 0
        return int(self._exp[self._log[x] + self._log[y]])

    def pow(self, x: int, n: int) -> int:
        if x == 0:
            if n < 0:
                raise ZeroDivisionError("0 cannot be raised to a negative power")
            return 1 if n == 0 else 0
        n %= self.q - 1
        if self._log is not None:
            return int(self._exp[(int(self._log[x]) * n) % (self.q - 1)])
        r, b = 1, x
        while n:
            if n & 1:
                r = self.mul_raw(r, b)
            b = self.mul_raw(b, b)
            n >>= 1
        return r

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(x, self.q - 2)

    def trace(self, x: int) -> int:
        return (x & self._trace_mask).bit_count() & 1

    def sqrt(self, x: int) -> int:
        # squaring is a field automorphism, so the root is unique
        return self.pow(x, 1 << (self.m - 1))

    def kth_root(self, x: int, k: int) -> int:
        from math import gcd
        if gcd(k, self.q - 1) != 1:
            raise ValueError(f"k={k} not coprime to q-1={self.q - 1}; k-th root not unique")
        return self.pow(x, pow(k, -1, self.q - 1))

    def frac_pow(self, x: int, num: int, den: int) -> int:
        """x^(num/den) via the inverse of den modulo q-1."""
        from math import gcd
        if den <= 0 or gcd(den, self.q - 1) != 1:
            raise ValueError(f"denominator {den} not invertible modulo q-1={self.q - 1}")
        if x == 0:
            if num < 0:
                raise ZeroDivisionError("0 cannot be raised to a negative power")
            return 1 if num == 0 else 0
        return self.pow(x, (num * pow(den, -1, self.q - 1)) % (self.q - 1))

    def half_trace(self, c: int) -> int:
        """sum of c^(4^i) for i = 0..(m-1)/2; for odd m solves h^2+h = c when Tr(c)=0."""
        if self.m % 2 == 0:
            raise ValueError("half-trace solver requires odd m")
        h, t = 0, c
        for _ in range((self.m + 1) // 2):
            h ^= t
            t = self.pow(t, 4)
        return h

    def solve_artin_schreier(self, c: int) -> int | None:
        """A root u of u^2 + u = c, or None when Tr(c) = 1 (no root in the field)."""
        if self.trace(c) == 1:
            return None
        u = self.half_trace(c)
        if self.mul(u, u) ^ u != c:
            raise AssertionError(f"half-trace failed for c={c:#x}")  # m even or bad ctx
        return u

    # -- table-backed bulk helpers -------------------------------------------

    def ensure_tables(self) -> None:
        """Build log/antilog tables (m <= 16). Idempotent."""
        if self._exp is not None:
            return
        if self.m > TABLE_MAX_M:
            raise ValueError(f"log tables unsupported for m={self.m} > {TABLE_MAX_M}")
        q = self.q
        g = self._find_generator()
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        e = 1
        for i in range(q - 1):
            exp[i] = e
            log[e] = i
            e = self.mul_raw(e, g)
        if e != 1:
            raise AssertionError("generator order mismatch")
        exp[q - 1:] = exp[:q - 1]  # doubled so exp[i+j] needs no reduction
        log[0] = -(q)  # poison: any use of log[0] lands far out of range
        self._exp, self._log = exp, log

    def _find_generator(self) -> int:
        n = self.q - 1
        ps = _prime_factors(n)
        for g in range(2, self.q):
            if all(self.pow(g, n // p) != 1 for p in ps):
                return g
        raise AssertionError("no generator found")  # unreachable for a field

    def monomial_table(self, coef: int, e: int) -> np.ndarray:
        """Array over all x in [0,q) of coef * x^e  (e >= 1)."""
        if e < 1:
            raise ValueError("monomial exponent must be >= 1")
        q = self.q
        if coef == 0:
            return np.zeros(q, dtype=np.int64)
        if self.m <= TABLE_MAX_M:
            self.ensure_tables()
            out = np.zeros(q, dtype=np.int64)
            logs = self._log[1:]
            idx = (int(self._log[coef]) + e * logs) % (q - 1)
            out[1:] = self._exp[idx]
            return out
        return np.array([0] + [self.mul_raw(coef, self.pow(x, e)) for x in range(1, q)],
                        dtype=np.int64)

    def trace_bits(self, vals: np.ndarray) -> np.ndarray:
        """Vector trace: parity of popcount(v & trace_mask), as uint8."""
        t = (vals.astype(np.int64) & self._trace_mask)
        t ^= t >> 16
        t ^= t >> 8
        t ^= t >> 4
        t ^= t >> 2
        t ^= t >> 1
        return (t & 1).astype(np.uint8)
