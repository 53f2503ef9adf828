"""Drinfeld doubles: axioms, quasitriangularity, the Drinfeld element."""

import pytest

from hopfqexp.double import (
    drinfeld_double,
    drinfeld_element,
    r_inverse,
    regular_representation,
    u_inverse,
    verify_quasitriangular,
    verify_s2_conjugation,
)
from hopfqexp.hopf import tensor_unit, validate

SMALL = ["trivial", "group:builtin:Z2", "group:builtin:Z3", "sweedler",
         "group:builtin:S3", "dualgroup:builtin:Z3"]


@pytest.mark.parametrize("name", SMALL)
def test_double_is_hopf(name, double_cache):
    qt = double_cache(name)
    assert validate(qt.algebra) == []


@pytest.mark.parametrize("name", SMALL)
def test_double_is_quasitriangular(name, double_cache):
    assert verify_quasitriangular(double_cache(name)) == []


@pytest.mark.parametrize("name", SMALL)
def test_s2_is_conjugation_by_u(name, double_cache):
    qt = double_cache(name)
    u = drinfeld_element(qt)
    assert verify_s2_conjugation(qt, u)


def test_r_inverse_is_two_sided(double_cache):
    qt = double_cache("sweedler")
    rinv = r_inverse(qt)
    unit = tensor_unit(qt.algebra)
    assert qt.R * rinv == unit
    assert rinv * qt.R == unit


def test_u_inverse(double_cache):
    qt = double_cache("sweedler")
    u = drinfeld_element(qt)
    uinv = u_inverse(qt)
    one = qt.algebra.unit_element()
    assert u * uinv == one and uinv * u == one


def test_u_counit_is_one(double_cache):
    qt = double_cache("sweedler")
    assert drinfeld_element(qt).counit() == 1


def test_double_dimension_is_square(preset_cache):
    H = preset_cache("group:builtin:Z3")
    qt = drinfeld_double(H)
    assert qt.algebra.dim == H.dim * H.dim


def test_embeddings_are_algebra_maps(preset_cache, double_cache):
    H = preset_cache("sweedler")
    qt = double_cache("sweedler")
    for i in range(H.dim):
        for j in range(H.dim):
            a, b = H.basis_element(i), H.basis_element(j)
            assert qt.iota_primal(a * b) == qt.iota_primal(a) * qt.iota_primal(b)
    assert qt.iota_primal(H.unit_element()) == qt.algebra.unit_element()


def test_regular_representation_faithful(double_cache):
    qt = double_cache("group:builtin:Z2")
    u = drinfeld_element(qt)
    m = regular_representation(qt.algebra, u)
    assert m.apply(qt.algebra.unit_element().coeffs) == list(u.coeffs)


def test_r_normalization(double_cache):
    # (eps (x) eps)(R) = 1 follows from the hexagons; check it directly
    qt = double_cache("group:builtin:Z3")
    val = qt.R.counit_leg(0).counit()
    assert val == 1
