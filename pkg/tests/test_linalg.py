"""Exact linear algebra and polynomial utilities."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from hopfqexp.linalg import (
    ExactMatrix,
    SpanSolver,
    default_order_bound,
    is_nilpotent,
    minimal_polynomial,
    solve_linear_system,
)
from hopfqexp.poly import (
    ExactPolynomial,
    cyclotomic_polynomial,
    poly_gcd,
    root_of_unity_order,
    squarefree_part,
)
from hopfqexp.scalars import CyclotomicNumber


def mat(rows, conductor=1):
    return ExactMatrix(rows, conductor)


def poly(coeffs, conductor=1):
    return ExactPolynomial(coeffs, conductor)


def test_matrix_ring_basics():
    a = mat([[1, 2], [3, 4]])
    b = mat([[0, 1], [1, 0]])
    assert (a @ b).entries[0][1].as_fraction() == 1
    assert (a + b - b) == a
    assert a @ a.inverse() == ExactMatrix.identity(2, 1)
    assert (a ** 0).is_identity()
    assert a ** 3 == a @ a @ a


def test_kron_dimensions_and_values():
    a = mat([[1, 2], [3, 4]])
    b = mat([[0, 5]])
    k = a.kron(b)
    assert len(k.entries) == 2 and len(k.entries[0]) == 4
    assert k.entries[0][1].as_fraction() == 5
    assert k.entries[1][3].as_fraction() == 20


def test_minimal_polynomial_companion_oracle():
    # companion matrix of x^3 - 2x + 1 has exactly that minimal polynomial
    c = mat([[0, 0, -1], [1, 0, 2], [0, 1, 0]])
    assert minimal_polynomial(c) == poly([1, -2, 0, 1])


def test_minimal_polynomial_jordan_oracle():
    # J_2(1) + J_1(1): minimal polynomial (x-1)^2, not the characteristic one
    j = mat([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    assert minimal_polynomial(j) == poly([1, -2, 1])


def test_minimal_polynomial_identity_and_zero():
    assert minimal_polynomial(ExactMatrix.identity(4, 1)) == poly([-1, 1])
    assert minimal_polynomial(ExactMatrix.zeros(3, 3, 1)) == poly([0, 1])


def test_is_nilpotent():
    assert is_nilpotent(mat([[0, 1], [0, 0]]))
    assert not is_nilpotent(mat([[0, 1], [1, 0]]))


def test_solve_linear_system():
    a = mat([[1, 2], [3, 4]])
    one = CyclotomicNumber.one(1)
    sol = solve_linear_system(a, [one, one])
    assert sol is not None
    assert a.apply(sol) == [one, one]
    # inconsistent system
    sing = mat([[1, 1], [1, 1]])
    assert solve_linear_system(sing, [one, one + one]) is None


def test_span_solver_reports_dependence():
    s = SpanSolver(1)
    one = CyclotomicNumber.one(1)
    zero = CyclotomicNumber.zero(1)
    assert s.insert([one, zero]) is None
    assert s.insert([zero, one]) is None
    combo = s.insert([one + one, one])
    assert combo is not None
    assert [c.as_fraction() for c in combo] == [2, 1]


@settings(max_examples=25)
@given(st.lists(st.integers(min_value=-5, max_value=5), min_size=2,
                max_size=4),
       st.lists(st.integers(min_value=-5, max_value=5), min_size=2,
                max_size=4))
def test_gcd_divides_both(a_coeffs, b_coeffs):
    a = poly(a_coeffs + [1])
    b = poly(b_coeffs + [1])
    g = poly_gcd(a, b)
    assert (a % g).is_zero()
    assert (b % g).is_zero()


def test_squarefree_part():
    # (x-1)^2 (x+1) -> (x-1)(x+1) = x^2 - 1
    f = poly([1, -1]) * poly([1, -1]) * poly([1, 1])
    assert squarefree_part(f.monic()) == poly([-1, 0, 1])


def test_root_of_unity_order_oracles():
    assert root_of_unity_order(poly([-1, 1]), 10) == 1        # x - 1
    assert root_of_unity_order(poly([-1, 0, 1]), 10) == 2     # x^2 - 1
    assert root_of_unity_order(cyclotomic_polynomial(12), 20) == 12
    # product of cyclotomics: order is the lcm
    f = cyclotomic_polynomial(2) * cyclotomic_polynomial(3)
    assert root_of_unity_order(f, 10) == 6


def test_root_of_unity_order_not_found():
    # x - 2 has no root of unity as a root: report None ("not found")
    assert root_of_unity_order(poly([-2, 1]), 1000) is None


def test_default_order_bound_positive():
    assert default_order_bound(poly([-1, 0, 1])) > 2


def test_rational_entries():
    half = Fraction(1, 2)
    a = ExactMatrix([[half, 0], [0, half]], 1)
    assert (a @ a).entries[0][0].as_fraction() == Fraction(1, 4)
