"""Classical level-one generators as exact q-series: E2, E4, E6, Delta, j,
quasi-modular assembly, and the weight-killing twelfth-power construction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import bernoulli, sigma
from .qseries import QSeries


@dataclass(frozen=True)
class FormSeries:
    weight: int
    series: QSeries
    label: str = "Custom"  # one of E2, E4, E6, Delta, J, Custom


def eisenstein_series(k: int, prec: int) -> FormSeries:
    """Normalized weight-k Eisenstein series 1 - (2k/B_k) sum sigma_(k-1)(n) q^n."""
    if k < 2 or k % 2 != 0:
        raise ValueError("weight must be an even integer >= 2")
    if prec < 1:
        raise ValueError("prec must be >= 1")
    factor = Fraction(-2 * k) / bernoulli(k)
    coeffs = [Fraction(1)] + [factor * sigma(k - 1, n) for n in range(1, prec)]
    label = {2: "E2", 4: "E4", 6: "E6"}.get(k, "Custom")
    return FormSeries(k, QSeries(1, 0, prec, coeffs), label)


@lru_cache(maxsize=32)
def _eis(k: int, prec: int) -> QSeries:
    return eisenstein_series(k, prec).series


def delta_series(prec: int) -> FormSeries:
    """The discriminant form (E4^3 - E6^2)/1728; simple zero at i-infinity."""
    if prec < 2:
        raise ValueError("prec must be >= 2")
    e4 = _eis(4, prec)
    e6 = _eis(6, prec)
    delta = (e4**3 - e6**2) * Fraction(1, 1728)
    return FormSeries(12, delta, "Delta")


def j_series(prec: int) -> FormSeries:
    """The j-function E4^3 / Delta, a weight-0 series with a simple pole."""
    if prec < 1:
        raise ValueError("prec must be >= 1")
    e4 = _eis(4, prec + 1)
    delta = delta_series(prec + 3).series
    return FormSeries(0, e4**3 * delta.inverse(), "J")


@dataclass(frozen=True)
class QuasiModularForm:
    """Weight-k depth-p object given by its tower of modular coefficient series.

    coeff_forms[r] multiplies the r-th power of E2 and has weight k - 2r.
    Coefficients are stored as raw series so meromorphic entries (ratios of
    holomorphic series) are representable.
    """

    weight: int
    depth: int
    coeff_forms: tuple[QSeries, ...]

    def __post_init__(self):
        if self.depth < 0:
            raise ValueError("depth must be >= 0")
        if len(self.coeff_forms) != self.depth + 1:
            raise ValueError("need depth + 1 coefficient series")


def quasi_series(qm: QuasiModularForm, prec: int) -> QSeries:
    """Assemble sum of coeff_forms[r] * E2^r to the requested precision."""
    if prec < 1:
        raise ValueError("prec must be >= 1")
    level = 1
    for f in qm.coeff_forms:
        level = level * f.level // math.gcd(level, f.level)
    e2 = _eis(2, (prec + level - 1) // level + 1)
    if level > 1:
        e2 = e2.rescale(level)
    acc = QSeries.zero(level, prec)
    power = QSeries.one(level, e2.prec)
    for r, f in enumerate(qm.coeff_forms):
        if r > 0:
            power = power * e2
        if not f.is_zero():
            g = f if f.level == level else f.rescale(level)
            acc = acc + g * power
    return acc.truncate(min(acc.prec, prec))


def h_series(f: QSeries, k: int, prec: int) -> QSeries:
    """f^12 / Delta^k at the level of f: a weight-0 series for weight-k input."""
    if f.is_zero():
        raise ValueError("f must be nonzero to precision")
    level = f.level
    f12 = f**12
    # Delta^(-k) at level `level` with enough terms that the product reaches prec
    need = max(prec - 12 * f.val + abs(k) + 4, abs(k) + 4)
    lvl1 = (need + level - 1) // level + 2
    delta = delta_series(lvl1 + 2 * abs(k) + 2).series
    dk = (delta.inverse() ** k) if k >= 0 else delta ** (-k)
    if level > 1:
        dk = dk.rescale(level)
    out = f12 * dk
    if out.prec > prec:
        out = out.truncate(prec)
    return out
