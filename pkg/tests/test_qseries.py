from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from codetheta.qseries import InsufficientPrecision, QSeries, power


def qs(scale, coeffs, precision):
    return QSeries(scale, coeffs, precision)


def test_add_examples():
    a = qs(1, {0: 1, 4: 2}, 10)
    b = qs(1, {8: 4}, 10)
    c = a + b
    assert c.coeffs == {0: 1, 4: 2, 8: 4} and c.precision == 10
    z = QSeries.zero(10)
    assert (a + z).coeffs == a.coeffs


def test_add_scales_lcm():
    a = qs(2, {1: 1}, 5)   # q^(1/2)
    b = qs(3, {1: 1}, 5)   # q^(1/3)
    c = a + b
    assert c.scale == 6 and c.coeffs == {3: 1, 2: 1}


def test_mul_examples():
    one_plus_q = qs(1, {0: 1, 1: 1}, 10)
    sq = one_plus_q * one_plus_q
    assert sq.coeffs == {0: 1, 1: 2, 2: 1}
    x = qs(1, {0: 1, 3: 5}, 7)
    assert (x * QSeries.one(7)).coeffs == x.coeffs


def test_mul_truncates_to_min_precision():
    a = qs(1, {0: 1, 1: 1}, 3)
    b = qs(1, {0: 1, 2: 1}, 10)
    c = a * b
    assert c.precision == 3
    assert c.coeffs == {0: 1, 1: 1, 2: 1}  # q^3 term dropped


def test_substitute_power():
    a = qs(1, {0: 1, 2: 1}, 5)
    b = a.substitute_power(3)
    assert b.coeffs == {0: 1, 6: 1} and b.precision == 15
    assert a.substitute_power(1).coeffs == a.coeffs


def test_equal_to_and_bounds():
    a = qs(1, {0: 1, 2: 4}, 13)
    b = qs(1, {0: 1, 2: 4, 12: 1}, 13)
    assert a.equal_to(b, 12)
    assert not a.equal_to(b, 13)
    with pytest.raises(InsufficientPrecision):
        a.equal_to(b, 14)


def test_coefficient_requires_precision():
    a = qs(1, {0: 1}, 5)
    assert a.coefficient(4) == 0
    with pytest.raises(InsufficientPrecision):
        a.coefficient(5)


def test_json_round_trip():
    a = qs(4, {0: 1, 2: 3, 6: 5}, Fraction(7, 2))
    b = QSeries.from_json_dict(a.to_json_dict())
    assert a == b
    data = a.to_json_dict()
    assert data["scale"] == 2  # normalized: gcd(2, 6, 4) = 2
    assert data["terms"] == sorted(data["terms"])


# ---- randomized ring axioms (also exercised at scale in acceptance) --------

small_series = st.builds(
    lambda coeffs, scale: QSeries(scale, coeffs, 30),
    st.dictionaries(st.integers(min_value=0, max_value=25),
                    st.integers(min_value=-50, max_value=50), max_size=6),
    st.sampled_from([1, 2, 3, 4]),
)


@settings(max_examples=150, deadline=None)
@given(small_series, small_series, small_series)
def test_ring_axioms(a, b, c):
    assert (a + b).equal_to(b + a, min(a.precision, b.precision))
    p3 = min(a.precision, b.precision, c.precision)
    assert ((a + b) + c).equal_to(a + (b + c), p3)
    assert (a * b).equal_to(b * a, p3)
    assert ((a * b) * c).equal_to(a * (b * c), p3)
    assert (a * (b + c)).equal_to(a * b + a * c, p3)


@settings(max_examples=100, deadline=None)
@given(small_series, small_series,
       st.integers(min_value=1, max_value=4))
def test_substitute_power_is_multiplicative(a, b, m):
    lhs = (a * b).substitute_power(m)
    rhs = a.substitute_power(m) * b.substitute_power(m)
    assert lhs.equal_to(rhs, min(lhs.precision, rhs.precision))


@settings(max_examples=100, deadline=None)
@given(small_series, small_series)
def test_precision_soundness(a, b):
    """Recomputing a product from higher-precision inputs agrees below the
    original bound."""
    bound = min(a.precision, b.precision)
    wide_a = QSeries(a.scale, a.coeffs, a.precision + 10)
    wide_b = QSeries(b.scale, b.coeffs, b.precision + 10)
    assert (a * b).equal_to((wide_a * wide_b).truncate(bound), bound)


def test_power():
    a = qs(1, {0: 1, 1: 1}, 6)
    assert power(a, 3).coeffs == {0: 1, 1: 3, 2: 3, 3: 1}
    assert power(a, 0).coeffs == {0: 1}
