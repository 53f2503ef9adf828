"""Quasi-exponent engine: frozen oracle values and route agreement.

The expected quasi-exponents below were derived independently before
the engine was written: for a group algebra the Drinfeld element acts
through the group, so qexp(C[G]) is the exponent of G; for the Taft
algebras the value equals the order of the grouplike g; tensor
products take least common multiples.
"""

import pytest

from hopfqexp.hopf import OrderSearchExhausted, tensor
from hopfqexp.linalg import ExactPolynomial
from hopfqexp.qexp import (
    check_corollary_24,
    element_minimal_polynomial,
    is_unipotent_element,
    quasi_exponent,
    t_map,
    u_min_poly_via_regular,
    u_min_poly_via_t,
    unipotency_index,
)

QEXP_ORACLE = {
    "trivial": 1,
    "group:builtin:Z2": 2,
    "group:builtin:Z3": 3,
    "group:builtin:Z4": 4,
    "group:builtin:Z6": 6,
    "group:builtin:Z2xZ2": 2,
    "group:builtin:S3": 6,
    "dualgroup:builtin:Z3": 3,
    "sweedler": 2,
    "taft:2": 2,
    "taft:3": 3,
    "taft:4": 4,
    "taft:5": 5,
    "uqb2:3": 3,
    "uqsl2:3": 3,
    "tensor:sweedler,group:builtin:Z3": 6,
}


@pytest.mark.parametrize("name,expected", sorted(QEXP_ORACLE.items()))
def test_qexp_oracle(name, expected, report_cache):
    assert report_cache(name).qexp == expected


def test_group_algebra_exponent_finite(report_cache):
    rep = report_cache("group:builtin:S3")
    assert rep.exponent == 6
    assert rep.unipotency_index == 1


def test_sweedler_report(report_cache):
    rep = report_cache("sweedler")
    assert rep.exponent == "infinite"
    assert rep.s2_order == 2
    assert rep.unipotency_index == 2
    # min poly of u is (x^2 - 1)^2
    f = ExactPolynomial([-1, 0, 1], rep.min_poly_u.conductor)
    assert rep.min_poly_u == f * f
    assert rep.squarefree == f


def test_sweedler_t_map_combination(preset_cache):
    H = preset_cache("sweedler")
    combo = t_map(H, 0) - t_map(H, 2).scale(2) + t_map(H, 4)
    assert combo.is_zero()
    # and no shorter relation exists: T0, T1, T2, T3 are independent
    assert not (t_map(H, 0) - t_map(H, 2)).is_zero()


def test_t_map_t1_is_identity(preset_cache):
    assert t_map(preset_cache("taft:3"), 1).is_identity()


ROUTE_PRESETS = ["sweedler", "group:builtin:Z2", "group:builtin:Z3",
                 "group:builtin:S3", "taft:3"]


@pytest.mark.parametrize("name", ROUTE_PRESETS)
def test_route_equivalence(name, preset_cache, double_cache):
    H = preset_cache(name)
    assert u_min_poly_via_t(H) == u_min_poly_via_regular(H, double_cache(name))


def test_cross_check_flag(preset_cache):
    rep = quasi_exponent(preset_cache("sweedler"), cross_check=True)
    assert rep.cross_checked
    assert rep.qexp == 2


def test_regular_route_envelope(preset_cache):
    # dim 27 squared is within the envelope; a fabricated huge bound is not
    from hopfqexp import qexp as qmod

    H = preset_cache("uqsl2:3")
    old = qmod.REGULAR_ROUTE_ENVELOPE
    qmod.REGULAR_ROUTE_ENVELOPE = 100
    try:
        with pytest.raises(ValueError):
            u_min_poly_via_regular(H)
    finally:
        qmod.REGULAR_ROUTE_ENVELOPE = old


def test_exhausted_bound_reports_not_found(preset_cache):
    with pytest.raises(OrderSearchExhausted, match="not found"):
        quasi_exponent(preset_cache("group:builtin:Z6"), bound=4)


def test_unipotency_index_pure_polynomial():
    # f = (x^2 - 1)^2, q = 2: (1 - x^2)^2 = f, so the index is 2
    f2 = ExactPolynomial([-1, 0, 1], 1)
    assert unipotency_index(f2 * f2, 2) == 2
    assert unipotency_index(ExactPolynomial([-1, 1], 1), 1) == 1


def test_tensor_lcm_property(preset_cache, report_cache):
    T = tensor(preset_cache("group:builtin:Z2"), preset_cache("group:builtin:Z3"))
    assert quasi_exponent(T).qexp == 6


def test_corollary_24_detects_exact_multiples(double_cache, report_cache):
    for name in ("sweedler", "group:builtin:Z3"):
        qt = double_cache(name)
        q = report_cache(name).qexp
        hits = [n for n in range(1, 13) if check_corollary_24(qt, n, 6)]
        assert hits == [n for n in range(1, 13) if n % q == 0]


def test_element_minimal_polynomial_oracle(preset_cache):
    H = preset_cache("sweedler")
    g = H.basis_element(2)
    assert element_minimal_polynomial(g) == ExactPolynomial([-1, 0, 1], 1)
    x = H.basis_element(1)
    assert element_minimal_polynomial(x) == ExactPolynomial([0, 0, 1], 1)


def test_is_unipotent_element(preset_cache):
    H = preset_cache("sweedler")
    one = H.unit_element()
    x = H.basis_element(1)
    assert is_unipotent_element(one + x)
    assert not is_unipotent_element(H.basis_element(2))  # g has order 2


def test_qexp_of_double_matches(double_cache, report_cache):
    qt = double_cache("sweedler")
    assert quasi_exponent(qt.algebra).qexp == report_cache("sweedler").qexp
