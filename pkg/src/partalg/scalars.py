"""Exact scalar arithmetic: rationals, prime fields, Laurent polynomials in q.

Everything downstream (Gram matrices, decomposition matrices, Fock
coefficients) is exact; there is no floating point anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_characteristic(p: int) -> int:
    if p != 0 and not is_prime(p):
        raise ValueError(f"characteristic must be 0 or prime, got {p}")
    return p


@dataclass(frozen=True)
class Scalar:
    """An element of Q (p = 0) or GF(p) (p prime).

    Stored reduced: a Fraction with positive denominator for p = 0, an int
    in [0, p) otherwise.  Arithmetic between different characteristics is
    rejected.
    """

    p: int
    val: object  # Fraction (p == 0) or int (p prime)

    def _check(self, other: "Scalar") -> None:
        if self.p != other.p:
            raise ValueError(f"field mismatch: GF({self.p}) vs GF({other.p})")

    def __add__(self, other):
        self._check(other)
        v = self.val + other.val
        return Scalar(self.p, v if self.p == 0 else v % self.p)

    def __sub__(self, other):
        self._check(other)
        v = self.val - other.val
        return Scalar(self.p, v if self.p == 0 else v % self.p)

    def __mul__(self, other):
        self._check(other)
        v = self.val * other.val
        return Scalar(self.p, v if self.p == 0 else v % self.p)

    def __neg__(self):
        return Scalar(self.p, -self.val if self.p == 0 else (-self.val) % self.p)

    def inv(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if self.p == 0:
            return Scalar(0, 1 / self.val)
        return Scalar(self.p, pow(self.val, -1, self.p))

    def __truediv__(self, other):
        return self * other.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = one(self.p)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return self.val != 0

    def is_integer(self) -> bool:
        """True if this scalar lies in the image of Z (always true for p > 0)."""
        return self.p > 0 or self.val.denominator == 1

    def __repr__(self):
        return f"{self.val}" if self.p == 0 else f"{self.val} (mod {self.p})"


def field(p: int, value) -> Scalar:
    """Build a scalar of characteristic p from an int, Fraction or 'a/b' string."""
    check_characteristic(p)
    if isinstance(value, Scalar):
        if value.p != p:
            raise ValueError("field mismatch")
        return value
    if isinstance(value, str):
        value = Fraction(value)
    if p == 0:
        return Scalar(0, Fraction(value))
    value = Fraction(value)
    if value.denominator % p == 0:
        raise ZeroDivisionError(f"denominator not invertible mod {p}")
    return Scalar(p, value.numerator * pow(value.denominator, -1, p) % p)


def zero(p: int) -> Scalar:
    return field(p, 0)


def one(p: int) -> Scalar:
    return field(p, 1)


class LaurentPoly:
    """Integer Laurent polynomial in q, stored as a map exponent -> coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        cc = {}
        if coeffs:
            for e, c in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                c = cc.get(e, 0) + c
                if c:
                    cc[e] = c
                elif e in cc:
                    del cc[e]
        self.coeffs = cc

    @staticmethod
    def q_power(e: int, c: int = 1) -> "LaurentPoly":
        return LaurentPoly({e: c}) if c else LaurentPoly()

    @staticmethod
    def const(c: int) -> "LaurentPoly":
        return LaurentPoly.q_power(0, c)

    def __add__(self, other):
        cc = dict(self.coeffs)
        for e, c in other.coeffs.items():
            c = cc.get(e, 0) + c
            if c:
                cc[e] = c
            elif e in cc:
                del cc[e]
        out = LaurentPoly()
        out.coeffs = cc
        return out

    def __neg__(self):
        out = LaurentPoly()
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        cc = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                c = cc.get(e, 0) + c1 * c2
                if c:
                    cc[e] = c
                elif e in cc:
                    del cc[e]
        out = LaurentPoly()
        out.coeffs = cc
        return out

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def substitute_one(self) -> int:
        """Evaluate at q = 1."""
        return sum(self.coeffs.values())

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                parts.append(f"{c:+d}")
            else:
                q = "q" if e == 1 else f"q^{e}"
                if c == 1:
                    parts.append(f"+{q}")
                elif c == -1:
                    parts.append(f"-{q}")
                else:
                    parts.append(f"{c:+d}*{q}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


def q_integer(n: int) -> LaurentPoly:
    """The balanced q-integer q^(n-1) + q^(n-3) + ... + q^(1-n); [0] = 0, [-n] = -[n]."""
    if n < 0:
        return -q_integer(-n)
    return LaurentPoly({e: 1 for e in range(n - 1, -n, -2)})


@cache
def q_binomial(n: int, k: int) -> LaurentPoly:
    """Balanced Gaussian binomial coefficient, via the standard q-Pascal recursion."""
    if k < 0 or k > n:
        return LaurentPoly()
    if k == 0 or k == n:
        return LaurentPoly.const(1)
    # [n,k] = q^k [n-1,k] + q^(k-n) [n-1,k-1]
    return LaurentPoly.q_power(k) * q_binomial(n - 1, k) + LaurentPoly.q_power(
        k - n
    ) * q_binomial(n - 1, k - 1)


@dataclass(frozen=True)
class ExactMatrix:
    """A rectangular matrix of Scalars over one ground field."""

    p: int
    rows: int
    cols: int
    entries: tuple  # tuple of tuples of Scalar

    @staticmethod
    def from_rows(p: int, rows) -> "ExactMatrix":
        ents = tuple(tuple(field(p, x) for x in row) for row in rows)
        ncols = len(ents[0]) if ents else 0
        if any(len(row) != ncols for row in ents):
            raise ValueError("ragged matrix")
        return ExactMatrix(p, len(ents), ncols, ents)

    def rank(self) -> int:
        return matrix_rank(self)

    def is_nonsingular(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def raw(self):
        return [[e.val for e in row] for row in self.entries]


def _rank_int_bareiss(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [row[:] for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    prev = 1
    row = 0
    for col in range(nc):
        piv = next((i for i in range(row, nr) if m[i][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pivot = m[row][col]
        for i in range(row + 1, nr):
            if not any(m[i][col:]):
                continue
            mi, mr = m[i], m[row]
            f = mi[col]
            for j in range(col, nc):
                mi[j] = (pivot * mi[j] - f * mr[j]) // prev
        prev = pivot
        row += 1
        rank += 1
        if row == nr:
            break
    return rank


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    m = [[x % p for x in row] for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    row = 0
    for col in range(nc):
        piv = next((i for i in range(row, nr) if m[i][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = pow(m[row][col], -1, p)
        mr = m[row]
        for i in range(row + 1, nr):
            f = m[i][col]
            if f:
                f = f * inv % p
                mi = m[i]
                for j in range(col, nc):
                    mi[j] = (mi[j] - f * mr[j]) % p
        row += 1
        rank += 1
        if row == nr:
            break
    return rank


def rank_of_raw(p: int, rows: list[list]) -> int:
    """Rank of a matrix given as raw Fractions/ints over characteristic p."""
    if not rows or not rows[0]:
        return 0
    if p > 0:
        return _rank_mod_p([[int(x) for x in row] for row in rows], p)
    scaled = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // _gcd(den, x.denominator)
        scaled.append([int(x * den) for x in row])
    return _rank_int_bareiss(scaled)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def matrix_rank(m: ExactMatrix) -> int:
    return rank_of_raw(m.p, m.raw())
