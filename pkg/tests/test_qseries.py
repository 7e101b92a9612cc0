import random
from fractions import Fraction

import pytest

from modkernel.arith import CyclotomicNumber, euler_phi
from modkernel.qseries import QSeries


def S(level, terms, prec):
    return QSeries.from_terms(level, terms, prec)


# ---------------------------------------------------------------------------
# addition


def test_add_cancellation_gives_zero_series():
    a = S(1, {0: 1, 1: 1}, 5)
    b = S(1, {0: -1, 1: -1}, 5)
    c = a + b
    assert c.is_zero()
    assert c.val == c.prec == 5


def test_add_keeps_negative_valuation():
    a = S(1, {-1: 1}, 5)
    b = QSeries.one(1, 5)
    c = a + b
    assert c.val == -1
    assert c.coeff(-1) == 1 and c.coeff(0) == 1


def test_add_precision_min_rule():
    a = S(1, {0: 1}, 10)
    b = S(1, {0: 1}, 5)
    assert (a + b).prec == 5


def test_level_mismatch_rejected():
    with pytest.raises(ValueError):
        S(1, {0: 1}, 5) + S(2, {0: 1}, 5)
    with pytest.raises(ValueError):
        S(1, {0: 1}, 5) * S(3, {0: 1}, 5)


# ---------------------------------------------------------------------------
# multiplication


def test_mul_shift():
    a = S(1, {-1: 1, 0: 1}, 5)
    q = S(1, {1: 1}, 6)
    c = a * q
    assert c.val == 0
    assert c.coeff(0) == 1 and c.coeff(1) == 1


def test_mul_telescoping_truncation():
    a = S(1, {0: 1, 1: -1}, 4)
    b = S(1, {0: 1, 1: 1, 2: 1, 3: 1}, 4)
    c = a * b
    # (1-q)(1+q+q^2+q^3) = 1 - q^4, invisible at prec 4
    assert c.prec == 4
    assert list(c.terms()) == [(0, CyclotomicNumber.one(1))]


def test_mul_zero_absorbs():
    z = QSeries.zero(1, 7)
    a = S(1, {2: 5}, 9)
    assert (z * a).is_zero()
    assert (z * a).prec == 7 + 2


def test_mul_precision_rule():
    a = S(1, {2: 1}, 10)  # val 2, prec 10
    b = S(1, {-1: 1}, 4)  # val -1, prec 4
    c = a * b
    assert c.prec == min(10 + (-1), 4 + 2)
    assert c.val == 1


# ---------------------------------------------------------------------------
# inversion


def test_inverse_geometric_series():
    a = S(1, {0: 1, 1: -1}, 6)
    inv = a.inverse()
    assert [inv.coeff(e) for e in range(6)] == [CyclotomicNumber.one(1)] * 6


def test_inverse_shifted():
    a = S(1, {1: 1, 2: 1}, 6)  # q(1 + q)
    inv = a.inverse()
    assert inv.val == -1
    expected = {-1: 1, 0: -1, 1: 1, 2: -1, 3: 1}
    for e, c in expected.items():
        assert inv.coeff(e) == c


def test_inverse_constant():
    a = QSeries.constant(1, 2, 5)
    assert a.inverse().coeff(0) == Fraction(1, 2)


def test_inverse_of_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        QSeries.zero(1, 5).inverse()


def test_inverse_contract_precision():
    rng = random.Random(11)
    for _ in range(100):
        level = rng.choice([1, 2, 3, 4, 6])
        val = rng.randint(-3, 3)
        length = rng.randint(1, 8)
        coeffs = [_rand_cyc(rng, level) for _ in range(length)]
        while coeffs[0].is_zero():
            coeffs[0] = _rand_cyc(rng, level)
        a = QSeries(level, val, val + length, coeffs)
        prod = a * a.inverse()
        assert prod.agrees_with(QSeries.one(level, prod.prec), prod.prec)


# ---------------------------------------------------------------------------
# rescaling


def test_rescale_level1_into_level2():
    q = S(1, {1: 1}, 3)
    r = q.rescale(2)
    assert r.level == 2 and r.val == 2 and r.prec == 6
    assert r.coeff(2) == 1


def test_rescale_j_like_example():
    a = S(1, {0: 1, 1: 744}, 2)
    r = a.rescale(3)
    assert r.coeff(0) == 1 and r.coeff(3) == 744
    assert all(c.is_zero() for c in (r.coeff(1), r.coeff(2), r.coeff(4), r.coeff(5)))


def test_rescale_identity():
    a = S(2, {0: 1, 1: 5}, 4)
    assert a.rescale(2) is a


def test_rescale_rejects_non_multiple():
    with pytest.raises(ValueError):
        S(2, {0: 1}, 3).rescale(3)


def test_rescale_support_on_multiples():
    rng = random.Random(5)
    for _ in range(20):
        prec = rng.randint(2, 6)
        a = S(1, {e: rng.randint(-5, 5) for e in range(-2, prec)}, prec)
        k = rng.choice([2, 3, 4])
        r = a.rescale(k)
        assert all(e % k == 0 for e, _ in r.terms())


def test_rescale_preserves_products():
    rng = random.Random(13)
    for _ in range(30):
        a = S(1, {e: rng.randint(-4, 4) for e in range(0, 5)}, 5)
        b = S(1, {e: rng.randint(-4, 4) for e in range(0, 5)}, 5)
        k = rng.choice([2, 3, 6])
        assert (a * b).rescale(k) == a.rescale(k) * b.rescale(k)


# ---------------------------------------------------------------------------
# ring axioms over the supported levels


def _rand_cyc(rng, N):
    return CyclotomicNumber(
        N, tuple(Fraction(rng.randint(-6, 6)) for _ in range(euler_phi(N)))
    )


def _rand_series(rng, level):
    val = rng.randint(-3, 3)
    length = rng.randint(0, 7)
    coeffs = [_rand_cyc(rng, level) for _ in range(length)]
    return QSeries(level, val, val + length, coeffs)


def test_ring_axioms_randomized():
    rng = random.Random(20240818)
    for level in (1, 2, 3, 4, 6):
        for _ in range(200):
            a = _rand_series(rng, level)
            b = _rand_series(rng, level)
            c = _rand_series(rng, level)
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            lhs = a * (b + c)
            rhs = a * b + a * c
            prec = min(lhs.prec, rhs.prec)
            assert lhs.truncate(prec) == rhs.truncate(prec)
            assert a * b == b * a


# ---------------------------------------------------------------------------
# serialization


def test_json_round_trip_bit_exact():
    a = QSeries(
        4,
        -2,
        1,
        [
            CyclotomicNumber(4, (Fraction(1, 3), Fraction(2))),
            CyclotomicNumber.zero(4),
            CyclotomicNumber(4, (Fraction(0), Fraction(-7, 2))),
        ],
    )
    blob = a.to_json()
    assert QSeries.from_json(blob) == a
    assert blob["level"] == 4 and blob["val"] == -2 and blob["prec"] == 1


def test_coeff_beyond_precision_rejected():
    a = S(1, {0: 1}, 3)
    with pytest.raises(ValueError):
        a.coeff(3)
