"""Exact scalar arithmetic: rationals, cyclotomic numbers, Bernoulli numbers,
divisor power sums, and the shifted-binomial determinant."""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# elementary number theory

_bernoulli_table: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(k: int) -> Fraction:
    """k-th Bernoulli number, coefficient convention x/(e^x - 1) = sum B_k x^k / k!."""
    if k < 0:
        raise ValueError("bernoulli index must be >= 0")
    with _bernoulli_lock:
        # long division of x by (e^x - 1), one coefficient at a time
        while len(_bernoulli_table) <= k:
            n = len(_bernoulli_table)
            acc = sum(
                Fraction(math.comb(n + 1, j)) * _bernoulli_table[j] for j in range(n)
            )
            _bernoulli_table.append(-acc / (n + 1))
        return _bernoulli_table[k]


def divisors(n: int) -> list[int]:
    """Positive divisors of n in increasing order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def sigma(s: int, n: int) -> int:
    """Sum of s-th powers of the positive divisors of n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(d**s for d in divisors(n))


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


# ---------------------------------------------------------------------------
# integer polynomials (coefficient lists, low degree first)


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact division of integer polynomials; den must be monic up to sign."""
    num = list(num)
    dden = len(den) - 1
    lead = den[-1]
    if abs(lead) != 1:
        raise ValueError("denominator must have leading coefficient +-1")
    quot = [0] * max(1, len(num) - dden)
    for i in range(len(num) - 1, dden - 1, -1):
        c = num[i] // lead
        quot[i - dden] = c
        if c:
            for j, dj in enumerate(den):
                num[i - dden + j] -= c * dj
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> tuple[int, ...]:
    """Coefficients of the N-th cyclotomic polynomial, constant term first.

    Computed by exact division of x^N - 1 by the product of the lower
    cyclotomic polynomials, so the result is canonical by construction.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    num = [-1] + [0] * (N - 1) + [1]
    for d in divisors(N):
        if d == N:
            continue
        num, rem = _poly_divmod_int(num, list(cyclotomic_poly(d)))
        if any(rem):
            raise ArithmeticError("cyclotomic division left a remainder")
    return tuple(num)


# ---------------------------------------------------------------------------
# cyclotomic numbers


@lru_cache(maxsize=None)
def _reduction_rows(N: int) -> tuple[tuple[Fraction, ...], ...]:
    """Coordinates of x^e mod Phi_N for e = phi(N) .. 2*phi(N) - 2."""
    phi = euler_phi(N)
    poly = cyclotomic_poly(N)
    # x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1}), Phi_N is monic
    base = [Fraction(-c) for c in poly[:phi]]
    rows = [tuple(base)]
    for _ in range(phi - 2):
        prev = rows[-1]
        shifted = [_ZERO] + list(prev[:-1])
        top = prev[-1]
        if top:
            shifted = [shifted[i] + top * base[i] for i in range(phi)]
        rows.append(tuple(shifted))
    return tuple(rows)


class CyclotomicNumber:
    """Element of Q(mu_N) in the power basis 1, mu, ..., mu^(phi(N)-1) mod Phi_N.

    Coordinates are the canonical form: two values are equal exactly when
    their coordinate vectors are equal. Order N = 1 degenerates to a plain
    rational.
    """

    __slots__ = ("order", "coords")

    def __init__(self, order: int, coords) -> None:
        phi = euler_phi(order)
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != phi:
            raise ValueError(f"need {phi} coordinates for order {order}, got {len(coords)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("CyclotomicNumber is immutable")

    # -- construction helpers

    @classmethod
    def from_rational(cls, value, order: int = 1) -> "CyclotomicNumber":
        phi = euler_phi(order)
        return cls(order, (Fraction(value),) + (_ZERO,) * (phi - 1))

    @classmethod
    def zero(cls, order: int = 1) -> "CyclotomicNumber":
        return cls.from_rational(0, order)

    @classmethod
    def one(cls, order: int = 1) -> "CyclotomicNumber":
        return cls.from_rational(1, order)

    @classmethod
    def root_of_unity(cls, order: int, power: int = 1) -> "CyclotomicNumber":
        """mu_N^power as an element of Q(mu_N)."""
        phi = euler_phi(order)
        power %= order
        coords = [_ZERO] * max(order, phi)
        coords[power] = _ONE
        return cls(order, _reduce_coords(order, coords))

    # -- basic predicates

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coords[0]

    # -- ring operations (same order required; rationals coerce freely)

    def _coerce(self, other):
        """Return other as a same-order value, or None when the op is not ours."""
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                if other.is_rational():
                    return CyclotomicNumber.from_rational(other.coords[0], self.order)
                if self.is_rational():
                    return None  # let the reflected operation coerce instead
                raise ValueError(
                    f"order mismatch: {self.order} vs {other.order}; embed explicitly"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(other, self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber(
            self.order, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber(
            self.order, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coords, other.coords
        phi = len(a)
        if phi == 1:
            return CyclotomicNumber(self.order, (a[0] * b[0],))
        prod = [_ZERO] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
        return CyclotomicNumber(self.order, _reduce_coords(self.order, prod))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic number is zero")
        if self.is_rational():
            return CyclotomicNumber.from_rational(1 / self.coords[0], self.order)
        phi_poly = [Fraction(c) for c in cyclotomic_poly(self.order)]
        g, u = _poly_xgcd_modpoly(list(self.coords), phi_poly)
        # g is a nonzero constant since Phi_N is irreducible
        scale = 1 / g
        inv = [c * scale for c in u]
        inv += [_ZERO] * (len(self.coords) - len(inv))
        return CyclotomicNumber(self.order, tuple(inv[: len(self.coords)]))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int) -> "CyclotomicNumber":
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def embed(self, order: int) -> "CyclotomicNumber":
        """Image under Q(mu_d) -> Q(mu_N) with mu_d = mu_N^(N/d); d must divide N."""
        if order == self.order:
            return self
        if order % self.order != 0:
            raise ValueError(f"cannot embed order {self.order} into order {order}")
        step = order // self.order
        acc = CyclotomicNumber.zero(order)
        for i, c in enumerate(self.coords):
            if c:
                acc = acc + c * CyclotomicNumber.root_of_unity(order, step * i)
        return acc

    # -- comparison / hashing / display

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if other.order != self.order:
            a, b = self, other
            if a.is_rational() and b.is_rational():
                return a.coords[0] == b.coords[0]
            return False
        return self.coords == other.coords

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.order, self.coords))

    def __repr__(self):
        if self.is_rational():
            return f"Cyc({self.coords[0]})"
        return f"Cyc(order={self.order}, {list(map(str, self.coords))})"

    # -- serialization

    def to_json(self) -> dict:
        return {"order": self.order, "coords": [str(c) for c in self.coords]}

    @classmethod
    def from_json(cls, obj: dict) -> "CyclotomicNumber":
        return cls(obj["order"], [Fraction(c) for c in obj["coords"]])


def _reduce_coords(N: int, raw: list[Fraction]) -> tuple[Fraction, ...]:
    phi = euler_phi(N)
    out = list(raw[:phi]) + [_ZERO] * max(0, phi - len(raw))
    if len(raw) > phi:
        rows = _reduction_rows(N)
        for e in range(phi, len(raw)):
            c = raw[e]
            if c:
                row = rows[e - phi]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
    return tuple(out)


def _poly_xgcd_modpoly(f: list[Fraction], modulus: list[Fraction]):
    """Return (g, u) with u*f = g mod modulus and g a constant (gcd)."""

    def trim(p):
        while len(p) > 1 and p[-1] == 0:
            p.pop()
        return p

    def is_zero(p):
        return len(p) == 1 and p[0] == 0

    def divmod_q(a, b):
        a = list(a)
        db = len(b) - 1
        inv_lead = 1 / b[-1]
        q = [_ZERO] * max(1, len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i] * inv_lead
            q[i - db] = c
            if c:
                for j in range(db + 1):
                    a[i - db + j] -= c * b[j]
        return trim(q), trim(a)

    def mul(a, b):
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return trim(out)

    def sub(a, b):
        n = max(len(a), len(b))
        return trim(
            [
                (a[i] if i < len(a) else _ZERO) - (b[i] if i < len(b) else _ZERO)
                for i in range(n)
            ]
        )

    r0, r1 = trim(list(modulus)), trim(list(f))
    s0, s1 = [_ZERO], [_ONE]  # coefficients of f
    while not is_zero(r1) and len(r1) > 1:
        q, r = divmod_q(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
    if is_zero(r1):
        # gcd has positive degree: f shares a factor with the modulus
        raise ZeroDivisionError("element is a zero divisor modulo the given polynomial")
    return r1[0], s1


# ---------------------------------------------------------------------------
# binomial determinant


def binom_matrix(n: int, m: int) -> list[list[int]]:
    """(m+1) x (m+1) matrix with entries C(n+1-j, i-1), 1-based i, j."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    return [
        [math.comb(n + 1 - j, i - 1) for j in range(1, m + 2)] for i in range(1, m + 2)
    ]


def binom_det(n: int, m: int) -> int:
    """Exact determinant of binom_matrix(n, m); requires n >= 2m."""
    if n < 2 * m:
        raise ValueError(f"n >= 2m required, got n={n}, m={m}")
    return int_det(binom_matrix(n, m))


def int_det(matrix: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


# ---------------------------------------------------------------------------
# text serialization for rationals ("p/q", "/q" omitted when q == 1)


def rational_str(x: Fraction) -> str:
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
