"""Hopf algebra structure layer: axioms, constructions, grouplikes."""

import pytest

from hopfqexp.hopf import (
    GrouplikeSet,
    HopfAlgebraData,
    TensorElement,
    dual,
    element_order,
    is_grouplike,
    s2_order,
    subalgebra_closure,
    tensor,
    tensor_unit,
    validate,
    variant,
)
from hopfqexp.linalg import ExactMatrix
from hopfqexp.presets import get_preset, sweedler


def test_sweedler_validates(preset_cache):
    assert validate(preset_cache("sweedler")) == []


def test_corrupted_antipode_fails_validate():
    H = sweedler()
    bad = [list(row) for row in H.antipode.entries]
    bad[1][1] = bad[1][1] + H.one_scalar  # perturb S(x)
    corrupt = HopfAlgebraData(
        name=H.name, dim=H.dim, conductor=H.conductor,
        basis_labels=H.basis_labels, mult=H.mult, unit=list(H.unit),
        comult=H.comult, counit=list(H.counit),
        antipode=ExactMatrix(bad, H.conductor))
    violations = validate(corrupt)
    assert violations
    assert any("antipode" in v for v in violations)


def test_corrupted_comult_fails_validate():
    H = sweedler()
    comult = [dict(d) for d in H.comult]
    (i, j), c = next(iter(comult[1].items()))
    comult[1][(i, j)] = c + c
    corrupt = HopfAlgebraData(
        name=H.name, dim=H.dim, conductor=H.conductor,
        basis_labels=H.basis_labels, mult=H.mult, unit=list(H.unit),
        comult=comult, counit=list(H.counit), antipode=H.antipode)
    assert validate(corrupt)


def test_dual_validates_and_is_involutive(preset_cache):
    H = preset_cache("sweedler")
    D = dual(H)
    assert validate(D) == []
    assert dual(D).same_structure(H)


def test_variant_op_cop(preset_cache):
    H = preset_cache("sweedler")
    for which in ("op", "cop", "op_cop"):
        V = variant(H, which)
        assert validate(V) == []
    assert variant(variant(H, "op"), "op").same_structure(H)


def test_tensor_product_validates(preset_cache):
    T = tensor(preset_cache("sweedler"), preset_cache("group:builtin:Z2"))
    assert validate(T) == []
    assert T.dim == 8


def test_antipode_order_sweedler(preset_cache):
    # S^2 = conjugation by g has order 2 on the Sweedler algebra
    assert s2_order(preset_cache("sweedler")) == 2


def test_antipode_involutive_on_group_algebra(preset_cache):
    assert s2_order(preset_cache("group:builtin:S3")) == 1


def test_grouplikes_of_sweedler(preset_cache):
    H = preset_cache("sweedler")
    gset = GrouplikeSet.build(H, H.grouplike_vectors)
    assert len(gset) == 2
    assert gset.exponent() == 2
    assert sorted(element_order(g) for g in gset.elements) == [1, 2]


def test_is_grouplike_rejects_non_grouplike(preset_cache):
    H = preset_cache("sweedler")
    assert not is_grouplike(H.basis_element(1))  # x is not grouplike
    assert is_grouplike(H.unit_element())


def test_element_arithmetic(preset_cache):
    H = preset_cache("sweedler")
    x = H.basis_element(1)
    g = H.basis_element(2)
    assert (x * x).is_zero()          # x^2 = 0
    assert g * g == H.unit_element()  # g^2 = 1
    assert g * x == -(x * g)          # gx = -xg
    assert x.counit().is_zero()
    assert x.antipode() == -(x * g)   # S(x) = -x g^{-1} = -xg


def test_antipode_inverse(preset_cache):
    H = preset_cache("taft:3")
    for k in range(H.dim):
        b = H.basis_element(k)
        assert b.antipode().antipode_inv() == b


def test_tensor_element_legs(preset_cache):
    H = preset_cache("sweedler")
    g = H.basis_element(2)
    t = tensor_unit(H)
    assert t.counit_leg(0) == H.unit_element()
    d = g.comul()  # g (x) g
    assert d.multiply_legs(0) == g * g
    assert d.swap_legs(0, 1) == d
    e = d.embed(3, [0, 2])
    assert isinstance(e, TensorElement) and e.arity == 3


def test_subalgebra_closure_group_part(preset_cache):
    H = preset_cache("sweedler")
    gens = [H.element(v) for v in H.grouplike_vectors]
    sub = subalgebra_closure(H, gens)
    assert sub.dim == 2
    assert validate(sub) == []


def test_subalgebra_closure_full(preset_cache):
    H = preset_cache("sweedler")
    sub = subalgebra_closure(H, [H.basis_element(k) for k in range(H.dim)])
    assert sub.dim == H.dim


def test_all_preset_axioms_hold_with_witness_messages():
    H = get_preset("uqb2:3")
    assert validate(H) == []


def test_invalid_variant_name(preset_cache):
    with pytest.raises(ValueError):
        variant(preset_cache("sweedler"), "nonsense")
