"""Truncated Laurent series in q_N = e^(2 pi i tau / N) with cyclotomic coefficients.

Precision is tracked per value and never widened implicitly: a series knows
its coefficients for exponents val <= e < prec and nothing beyond. The zero
series (to precision) is stored with val == prec and no coefficients.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import CyclotomicNumber


class QSeries:
    __slots__ = ("level", "val", "prec", "coeffs")

    def __init__(self, level: int, val: int, prec: int, coeffs) -> None:
        if level < 1:
            raise ValueError("level must be >= 1")
        coeffs = [self._as_coeff(level, c) for c in coeffs]
        if len(coeffs) != prec - val:
            raise ValueError("coefficient count must equal prec - val")
        # canonical form: no leading zeros, zero series has val == prec
        while coeffs and coeffs[0].is_zero():
            coeffs.pop(0)
            val += 1
        if not coeffs:
            val = prec
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "val", val)
        object.__setattr__(self, "prec", prec)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    @staticmethod
    def _as_coeff(level: int, c) -> CyclotomicNumber:
        if isinstance(c, CyclotomicNumber):
            if c.order == level:
                return c
            if c.is_rational():
                return CyclotomicNumber.from_rational(c.coords[0], level)
            return c.embed(level)
        return CyclotomicNumber.from_rational(Fraction(c), level)

    # -- constructors

    @classmethod
    def zero(cls, level: int, prec: int) -> "QSeries":
        return cls(level, prec, prec, [])

    @classmethod
    def constant(cls, level: int, value, prec: int) -> "QSeries":
        if prec < 1:
            raise ValueError("constant needs prec >= 1")
        return cls.from_terms(level, {0: value}, prec)

    @classmethod
    def one(cls, level: int, prec: int) -> "QSeries":
        return cls.constant(level, 1, prec)

    @classmethod
    def from_terms(cls, level: int, terms: dict, prec: int) -> "QSeries":
        """Series from an exponent -> coefficient mapping, truncated at prec."""
        live = {e: c for e, c in terms.items() if e < prec}
        if not live:
            return cls.zero(level, prec)
        val = min(live)
        coeffs = [live.get(e, 0) for e in range(val, prec)]
        return cls(level, val, prec, coeffs)

    # -- inspection

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, e: int) -> CyclotomicNumber:
        """Coefficient of q_N^e; e must be below the precision bound."""
        if e >= self.prec:
            raise ValueError(f"exponent {e} is beyond precision O(q^{self.prec})")
        if e < self.val:
            return CyclotomicNumber.zero(self.level)
        return self.coeffs[e - self.val]

    def terms(self):
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                yield self.val + i, c

    def truncate(self, prec: int) -> "QSeries":
        if prec >= self.prec:
            if prec == self.prec:
                return self
            raise ValueError("cannot extend precision by truncation")
        keep = [c for e, c in zip(range(self.val, self.prec), self.coeffs) if e < prec]
        return QSeries(self.level, min(self.val, prec), prec, keep)

    # -- ring operations

    def _coerce(self, other):
        if isinstance(other, QSeries):
            if other.level != self.level:
                raise ValueError(f"level mismatch: {self.level} vs {other.level}")
            return other
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return QSeries.constant(self.level, other, self.prec)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        prec = min(self.prec, other.prec)
        lo = min(self.val, other.val, prec)
        coeffs = [self.coeff(e) + other.coeff(e) for e in range(lo, prec)]
        return QSeries(self.level, lo, prec, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.level, self.val, self.prec, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            c = self._as_coeff(self.level, other)
            if c.is_zero():
                return QSeries.zero(self.level, self.prec)
            return QSeries(self.level, self.val, self.prec, [c * x for x in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        # Cauchy product; known range follows min(p_a + v_b, p_b + v_a)
        prec = min(self.prec + other.val, other.prec + self.val)
        if self.is_zero() or other.is_zero():
            return QSeries.zero(self.level, prec)
        val = self.val + other.val
        n = prec - val
        out = [CyclotomicNumber.zero(self.level) for _ in range(n)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            jmax = min(len(other.coeffs), n - i)
            for j in range(jmax):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return QSeries(self.level, val, prec, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            return self.inverse() ** (-k)
        result = None
        base = self
        while True:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if not k:
                break
            base = base * base
        if result is None:
            return QSeries.one(self.level, self.prec - self.val)
        return result

    def inverse(self) -> "QSeries":
        """Multiplicative inverse; self must be nonzero to precision."""
        if self.is_zero():
            raise ZeroDivisionError("series is zero to its precision")
        n = len(self.coeffs)
        lead_inv = self.coeffs[0].inverse()
        inv = [lead_inv]
        for k in range(1, n):
            acc = CyclotomicNumber.zero(self.level)
            for j in range(1, k + 1):
                a = self.coeffs[j]
                if not a.is_zero():
                    acc = acc + a * inv[k - j]
            inv.append(-(lead_inv * acc))
        return QSeries(self.level, -self.val, self.prec - 2 * self.val, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def rescale(self, target_level: int) -> "QSeries":
        """Reinterpret q_d = q_N^(N/d) for d = self.level dividing N = target_level."""
        if target_level % self.level != 0:
            raise ValueError(
                f"target level {target_level} is not a multiple of {self.level}"
            )
        k = target_level // self.level
        if k == 1:
            return self
        terms = {e * k: c.embed(target_level) for e, c in self.terms()}
        return QSeries.from_terms(target_level, terms, self.prec * k)

    # -- comparison

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.level == other.level
            and self.val == other.val
            and self.prec == other.prec
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.level, self.val, self.prec, self.coeffs))

    def agrees_with(self, other: "QSeries", prec: int) -> bool:
        """Equality of coefficients for all exponents below prec.

        Raises when either operand is not actually known that far, so a
        passing comparison always names an honest precision.
        """
        other = self._coerce(other)
        diff = self - other
        if diff.prec < prec:
            raise ValueError(
                f"operands only support comparison below q^{diff.prec}, asked {prec}"
            )
        return diff.is_zero() or diff.val >= prec

    def __repr__(self):
        head = ", ".join(f"q^{e}:{c!r}" for e, c in list(self.terms())[:4])
        return (
            f"QSeries(level={self.level}, val={self.val}, prec={self.prec}, [{head}"
            + (", ..." if len(self.coeffs) > 4 else "")
            + "])"
        )

    # -- serialization

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "val": self.val,
            "prec": self.prec,
            "coeffs": [c.to_json() for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "QSeries":
        coeffs = [CyclotomicNumber.from_json(c) for c in obj["coeffs"]]
        return cls(obj["level"], obj["val"], obj["prec"], coeffs)
