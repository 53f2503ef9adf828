"""Exact cyclotomic scalar arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfqexp.scalars import (
    ConductorMismatch,
    CyclotomicNumber,
    as_scalar,
    euler_phi,
    format_rational,
    lift_conductor,
    parse_rational,
    scalar_from_json,
    scalar_to_json,
)

rationals = st.builds(
    Fraction,
    st.integers(min_value=-1000, max_value=1000),
    st.integers(min_value=1, max_value=50))
conductors = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12])


def cyclotomics(cond):
    dim = euler_phi(cond)
    coeff = st.integers(min_value=-20, max_value=20)
    return st.tuples(
        st.lists(coeff, min_size=dim, max_size=dim),
        st.integers(min_value=1, max_value=12),
    ).map(lambda t: CyclotomicNumber(
        cond, [Fraction(c, t[1]) for c in t[0]]))


@settings(max_examples=60)
@given(conductors.flatmap(lambda m: st.tuples(
    cyclotomics(m), cyclotomics(m), cyclotomics(m))))
def test_field_axioms(triple):
    a, b, c = triple
    zero = CyclotomicNumber.zero(a.conductor)
    one = CyclotomicNumber.one(a.conductor)
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + zero == a
    assert a * one == a
    assert a - a == zero
    if not a.is_zero():
        assert a * a.inverse() == one


@settings(max_examples=40)
@given(conductors.flatmap(cyclotomics))
def test_json_round_trip(a):
    assert scalar_from_json(scalar_to_json(a), a.conductor) == a


@given(rationals)
def test_rational_text_round_trip(r):
    assert parse_rational(format_rational(r)) == r


def test_primitive_root_order():
    for m in (1, 2, 3, 4, 5, 6, 8, 12):
        z = CyclotomicNumber.zeta(m)
        powers = [z ** k for k in range(1, m + 1)]
        assert powers[-1] == CyclotomicNumber.one(m)
        assert all(p != CyclotomicNumber.one(m) for p in powers[:-1])


def test_cyclotomic_relation():
    # 1 + z3 + z3^2 = 0
    z = CyclotomicNumber.zeta(3)
    assert (CyclotomicNumber.one(3) + z + z * z).is_zero()


def test_lift_conductor():
    z3 = CyclotomicNumber.zeta(3)
    lifted = lift_conductor(z3, 12)
    assert lifted.conductor == 12
    assert lifted == CyclotomicNumber.zeta(12) ** 4


def test_conductor_mismatch():
    with pytest.raises(ConductorMismatch):
        CyclotomicNumber.zeta(3) + CyclotomicNumber.zeta(4)


def test_as_scalar_coercions():
    assert as_scalar(3, 4) == CyclotomicNumber.rational(3, 4)
    assert as_scalar(Fraction(1, 2), 1) + as_scalar(Fraction(1, 2), 1) \
        == CyclotomicNumber.one(1)


def test_inverse_of_one_minus_zeta():
    z = CyclotomicNumber.zeta(5)
    a = CyclotomicNumber.one(5) - z
    assert a * a.inverse() == CyclotomicNumber.one(5)
