"""Equipped Frobenius algebras: elements, axioms, and verification."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cardyfrob import (
    AlgebraElement,
    CheckResult,
    EquippedFrobeniusAlgebra,
    InputError,
    all_passed,
    center_dimension,
    failures,
    is_semisimple,
    trace_form,
    verify_equipped,
)

# -- elements -------------------------------------------------------------------


def test_element_arithmetic():
    x = AlgebraElement({"a": 1, "b": Fraction(1, 2)})
    y = AlgebraElement({"b": Fraction(1, 2), "c": -1})
    assert (x + y).coeffs == {"a": 1, "b": 1, "c": -1}
    assert (x - y).coeffs == {"a": 1, "c": 1}
    assert (-x).coeffs == {"a": -1, "b": Fraction(-1, 2)}
    assert (x * 2).coeffs == {"a": 2, "b": 1}
    assert (x * 0).is_zero()


def test_element_drops_zero_coefficients():
    assert AlgebraElement({"a": 0}).is_zero()
    assert AlgebraElement({"a": 1, "b": 0}).coeffs == {"a": 1}
    assert AlgebraElement() == AlgebraElement({})


def test_element_equality_and_hash():
    x = AlgebraElement({"a": Fraction(2, 4)})
    y = AlgebraElement({"a": Fraction(1, 2)})
    assert x == y
    assert hash(x) == hash(y)
    assert x != AlgebraElement({"a": 1})


def test_element_repr_uses_canonical_fractions():
    assert repr(AlgebraElement({"a1": Fraction(1, 2)})) == "1/2*a1"
    assert repr(AlgebraElement()) == "0"


def test_coefficient_lookup():
    x = AlgebraElement({"a": 3})
    assert x.coefficient("a") == 3
    assert x.coefficient("missing") == 0


# -- handcrafted algebras ---------------------------------------------------------


def z3_class_algebra(corrupted: bool = False) -> EquippedFrobeniusAlgebra:
    """The group algebra of Z3 on the basis of its three class sums."""
    products = {
        ("a0", "a0"): {"a0": 1},
        ("a0", "a1"): {"a1": 1},
        ("a0", "a2"): {"a2": 1},
        ("a1", "a0"): {"a1": 1},
        ("a1", "a1"): {"a1": 1} if corrupted else {"a2": 1},
        ("a1", "a2"): {"a0": 1},
        ("a2", "a0"): {"a2": 1},
        ("a2", "a1"): {"a0": 1},
        ("a2", "a2"): {"a1": 1},
    }
    return EquippedFrobeniusAlgebra(
        basis=["a0", "a1", "a2"],
        products=products,
        linear_form={"a0": Fraction(1, 3)},
        involution={"a0": "a0", "a1": "a2", "a2": "a1"},
        unit={"a0": 1},
    )


def dual_numbers() -> EquippedFrobeniusAlgebra:
    """1 and x with x^2 = 0: a Frobenius algebra that is not semisimple."""
    return EquippedFrobeniusAlgebra(
        basis=["one", "x"],
        products={
            ("one", "one"): {"one": 1},
            ("one", "x"): {"x": 1},
            ("x", "one"): {"x": 1},
            ("x", "x"): {},
        },
        linear_form={"x": 1},
        involution={"one": "one", "x": "x"},
        unit={"one": 1},
    )


def test_handcrafted_z3_passes_all_axioms():
    alg = z3_class_algebra()
    results = verify_equipped(alg)
    assert all_passed(results), failures(results)


def test_corrupted_product_is_caught():
    results = verify_equipped(z3_class_algebra(corrupted=True))
    failed = {result.name for result in failures(results)}
    assert "associativity" in failed
    witness = next(r.witness for r in results if r.name == "associativity")
    assert witness


def test_dual_numbers_are_frobenius_but_not_semisimple():
    alg = dual_numbers()
    results = verify_equipped(alg)
    assert all_passed(results), failures(results)
    assert not is_semisimple(alg)
    assert center_dimension(alg) == 2
    form = trace_form(alg)
    # trace of multiplication by x is zero on both basis vectors
    assert form[1][1] == 0


def test_constructor_validation():
    with pytest.raises(InputError):
        EquippedFrobeniusAlgebra(
            basis=["a", "a"],
            products={},
            linear_form={},
            involution={"a": "a"},
            unit={"a": 1},
        )
    with pytest.raises(InputError):
        EquippedFrobeniusAlgebra(
            basis=["a"],
            products={},
            linear_form={"zz": 1},
            involution={"a": "a"},
            unit={"a": 1},
        )
    with pytest.raises(InputError):
        EquippedFrobeniusAlgebra(
            basis=["a", "b"],
            products={},
            linear_form={},
            involution={"a": "a", "b": "a"},
            unit={"a": 1},
        )
    with pytest.raises(InputError):
        EquippedFrobeniusAlgebra(
            basis=[],
            products={},
            linear_form={},
            involution={},
            unit={},
        )


def test_unknown_labels_rejected():
    alg = z3_class_algebra()
    with pytest.raises(InputError):
        alg.basis_element("zz")
    with pytest.raises(InputError):
        alg.element({"zz": 1})
    with pytest.raises(InputError):
        alg.structure_constant("a0", "a0", "zz")


def test_power_rejects_negative_exponent():
    alg = z3_class_algebra()
    with pytest.raises(InputError):
        alg.power(alg.unit, -1)


# -- operations on the built algebras ---------------------------------------------


def test_structure_constant_accessor(suite_algebras):
    b = suite_algebras["z2"].B
    assert b.structure_constant("b1", "b2", "b0") == 1
    assert b.structure_constant("b1", "b1", "b0") == 0


def test_linear_and_bilinear(suite_algebras):
    a = suite_algebras["z3"].A
    x = a.basis_element("a1")
    y = a.basis_element("a2")
    assert a.bilinear(x, y) == Fraction(1, 3)
    assert a.bilinear(x, x) == 0
    assert a.linear(a.unit) == Fraction(1, 3)


def test_star_operations(suite_algebras):
    a = suite_algebras["z3"].A
    assert a.star_label("a1") == "a2"
    x = a.element({"a1": 2, "a0": 1})
    assert a.star(x) == a.element({"a2": 2, "a0": 1})
    assert a.star(a.star(x)) == x


def test_casimir_is_central_and_twisted_variant(suite_algebras):
    h = suite_algebras["s3"]
    for alg in (h.A, h.B):
        k = alg.casimir()
        for label in alg.basis:
            e = alg.basis_element(label)
            assert alg.multiply(k, e) == alg.multiply(e, k)
        assert alg.star(alg.twisted_casimir()) == alg.twisted_casimir()


def test_casimir_basis_independence(suite_algebras):
    b = suite_algebras["z2"].B
    shuffled = b.permuted(("b3", "b1", "b0", "b2"))
    assert shuffled.casimir() == b.casimir()
    assert shuffled.twisted_casimir() == b.twisted_casimir()
    results = verify_equipped(shuffled)
    assert all_passed(results), failures(results)


def test_casimir_sandwich_properties(suite_algebras):
    b = suite_algebras["s3"].B
    assert b.casimir_sandwich(b.unit) == b.casimir()
    x = b.basis_element("b1")
    y = b.basis_element("b2")
    wrapped = b.casimir_sandwich(x)
    for label in b.basis:
        e = b.basis_element(label)
        assert b.multiply(wrapped, e) == b.multiply(e, wrapped)
    # The sandwich is tracial: wrapping xy and yx gives the same element.
    assert b.casimir_sandwich(b.multiply(x, y)) == b.casimir_sandwich(
        b.multiply(y, x)
    )
    # And self-adjoint for the pairing.
    assert b.bilinear(b.casimir_sandwich(x), y) == b.bilinear(
        x, b.casimir_sandwich(y)
    )


def test_permuted_requires_same_labels(suite_algebras):
    b = suite_algebras["z2"].B
    with pytest.raises(InputError):
        b.permuted(("b0", "b1"))


def test_dual_reconstruction_identity(suite_algebras):
    a = suite_algebras["s3"].A
    x = a.element({"a0": Fraction(1, 2), "a2": -3})
    assert a.dual_reconstruct(x) == x


def test_center_dimensions(suite_algebras):
    # A is the center of a group algebra, hence commutative.
    for name, h in suite_algebras.items():
        assert center_dimension(h.A) == h.A.dim, name
    # B for (Z2, {e}) is a full 2x2 matrix algebra: one-dimensional center.
    assert center_dimension(suite_algebras["z2"].B) == 1
    assert center_dimension(suite_algebras["s3_k01"].B) == 1


def test_semisimplicity_of_built_algebras(suite_algebras):
    for name in ("z2", "z3", "s3", "s3_k01"):
        h = suite_algebras[name]
        assert is_semisimple(h.A), name
        assert is_semisimple(h.B), name


def test_check_result_helpers():
    good = CheckResult("good", True)
    bad = CheckResult("bad", False, "details")
    assert all_passed([good])
    assert not all_passed([good, bad])
    assert failures([good, bad]) == [bad]


# -- algebraic laws on random elements --------------------------------------------

small_coeffs = st.dictionaries(
    st.sampled_from(["a0", "a1", "a2"]),
    st.fractions(min_value=-3, max_value=3, max_denominator=6),
    max_size=3,
)


@settings(max_examples=50, deadline=None)
@given(small_coeffs, small_coeffs, small_coeffs)
def test_multiplication_laws(cx, cy, cz):
    alg = z3_class_algebra()
    x, y, z = alg.element(cx), alg.element(cy), alg.element(cz)
    assert alg.multiply(alg.multiply(x, y), z) == alg.multiply(x, alg.multiply(y, z))
    assert alg.multiply(x + y, z) == alg.multiply(x, z) + alg.multiply(y, z)
    assert alg.bilinear(x, y) == alg.bilinear(y, x)
    assert alg.star(alg.multiply(x, y)) == alg.multiply(alg.star(y), alg.star(x))
    assert alg.dual_reconstruct(x) == x
