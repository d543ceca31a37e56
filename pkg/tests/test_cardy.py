"""The paired structure: A, B, phi, U, the Cardy identity, and Hecke algebras."""

from __future__ import annotations

from fractions import Fraction

import pytest

from cardyfrob import (
    AlgebraElement,
    ConsistencyError,
    FieldCatalog,
    InputError,
    all_passed,
    build_catalog,
    build_cardy_frobenius,
    build_group,
    build_phi,
    build_reps,
    cardy_from_pair,
    coset_nset,
    failures,
    hecke_check,
    phi_rank,
    subgroup_closure,
    subgroup_from_elements,
    trivial_subgroup,
    verify_cardy_frobenius,
    verify_equipped,
)
from cardyfrob.actions import BoundaryField


def test_cardy_from_pair_matches_fixture(suite_algebras):
    z2 = build_group(2, [[1, 0]])
    h = cardy_from_pair(z2, trivial_subgroup(z2))
    fixture = suite_algebras["z2"]
    assert h.A.basis == fixture.A.basis
    assert h.B.basis == fixture.B.basis
    assert h.phi == fixture.phi
    assert h.u == fixture.u


# -- the Z2 micro example -----------------------------------------------------


def test_z2_boundary_algebra_is_matrix_units(suite_algebras):
    b = suite_algebras["z2"].B
    # representatives: b0=(0,0), b1=(0,1), b2=(1,0), b3=(1,1)
    expected = {
        ("b0", "b0"): {"b0": 1},
        ("b0", "b1"): {"b1": 1},
        ("b1", "b2"): {"b0": 1},
        ("b1", "b3"): {"b1": 1},
        ("b2", "b1"): {"b3": 1},
        ("b2", "b0"): {"b2": 1},
        ("b3", "b2"): {"b2": 1},
        ("b3", "b3"): {"b3": 1},
    }
    for i, left in enumerate(b.basis):
        for j, right in enumerate(b.basis):
            coeffs = {
                b.basis[out]: value for out, value in b.pair_products(i, j).items()
            }
            assert coeffs == expected.get((left, right), {}), (left, right)


def test_z2_unit_and_linear_form(suite_algebras):
    b = suite_algebras["z2"].B
    assert b.unit == AlgebraElement({"b0": 1, "b3": 1})
    assert b.linear(b.basis_element("b0")) == Fraction(1, 2)
    assert b.linear(b.basis_element("b1")) == 0
    assert b.linear(b.basis_element("b3")) == Fraction(1, 2)


def test_z2_casimirs_and_u(suite_algebras):
    h = suite_algebras["z2"]
    assert h.A.casimir() == AlgebraElement({"a0": 4})
    assert h.u == AlgebraElement({"a0": 2})
    assert h.A.multiply(h.u, h.u) == h.A.twisted_casimir()
    assert h.B.casimir() == AlgebraElement({"b0": 4, "b3": 4})
    assert h.B.twisted_casimir() == AlgebraElement({"b0": 2, "b3": 2})
    assert h.phi_apply(h.u) == h.B.twisted_casimir()


def test_z2_phi_collapses_to_the_unit(suite_algebras):
    # Both subgroups of Z2 are normal, so N acts trivially on X and phi
    # sends every class sum to a multiple of the identity matrix.
    h = suite_algebras["z2"]
    unit = h.B.unit
    assert h.phi_apply(h.A.basis_element("a0")) == unit
    assert h.phi_apply(h.A.basis_element("a1")) == unit
    assert phi_rank(h) == 1


def test_phi_rank_a5(suite_algebras):
    h = suite_algebras["a5_k0123"]
    assert phi_rank(h) == 2 == h.A.dim


# -- axiom suite on small pairs ------------------------------------------------


@pytest.mark.parametrize("name", ["z2", "z3", "s3_k01"])
def test_axioms_small_pairs(suite_algebras, name):
    h = suite_algebras[name]
    for alg in (h.A, h.B):
        results = verify_equipped(alg)
        assert all_passed(results), (name, failures(results))
    results = verify_cardy_frobenius(h)
    assert all_passed(results), (name, failures(results))


def test_verify_reports_expected_check_names(suite_algebras):
    names = [result.name for result in verify_cardy_frobenius(suite_algebras["z3"])]
    assert names == [
        "phi-unit",
        "phi-homomorphism",
        "phi-central",
        "phi-star",
        "u-squared",
        "phi-u",
        "u-coefficients",
        "cardy",
        "nu-multiplicative",
        "nu-star-transpose",
        "form-from-traces",
        "linear-form-from-traces",
        "nu-equivariant",
        "burnside-dimension",
    ]


def test_phi_dual_is_adjoint_to_phi(suite_algebras):
    # (phi(x), y)_B = (x, phi^dual(y))_A for all basis vectors.
    h = suite_algebras["s3"]
    for a_label in h.A.basis:
        x = h.A.basis_element(a_label)
        for b_label in h.B.basis:
            y = h.B.basis_element(b_label)
            assert h.B.bilinear(h.phi_apply(x), y) == h.A.bilinear(
                x, h.phi_dual_apply(y)
            )


# -- negative control ----------------------------------------------------------


def test_tampered_catalog_fails_phi_reconstruction():
    # Fuse the two distinct orbits (0,0) and (0,1) of the Z2 conjugation
    # action into one fake orbit: the class-sum matrices are no longer
    # constant on it, which build_phi must detect.
    z2 = build_group(2, [[1, 0]])
    h = cardy_from_pair(z2, trivial_subgroup(z2))
    catalog = h.catalog
    fused = BoundaryField(
        label="b0",
        representative=(0, 0),
        orbit=((0, 0), (0, 1)),
        aut_order=2,
        star="b0",
    )
    keep = tuple(
        field for field in catalog.boundary if field.label in ("b2", "b3")
    )
    broken = FieldCatalog(
        nset=catalog.nset,
        interior=catalog.interior,
        boundary=(fused,) + keep,
        provenance="",
    )
    reps = build_reps(broken)
    with pytest.raises(ConsistencyError):
        build_phi(broken, reps)


# -- Hecke comparison ------------------------------------------------------------


def test_hecke_s3():
    s3 = build_group(3, [[1, 0, 2], [0, 2, 1]])
    transposition = next(a for a in s3.elements() if s3.element_order(a) == 2)
    s = subgroup_closure(s3, [transposition])
    comparison = hecke_check(s3, s)
    assert all_passed(comparison.checks), failures(comparison.checks)
    assert comparison.double_coset_count == 2
    assert comparison.boundary_dimension == 2


def test_hecke_s4_transposition():
    s4 = build_group(4, [[1, 0, 2, 3], [0, 2, 1, 3], [0, 1, 3, 2]])
    assert s4.perms is not None
    transposition = next(a for a in s4.elements() if s4.perms[a] == (1, 0, 2, 3))
    s = subgroup_closure(s4, [transposition])
    comparison = hecke_check(s4, s)
    assert all_passed(comparison.checks), failures(comparison.checks)
    assert comparison.boundary_dimension == comparison.double_coset_count == 7


def test_hecke_whole_group_is_one_dimensional():
    s3 = build_group(3, [[1, 0, 2], [0, 2, 1]])
    whole = subgroup_from_elements(s3, s3.elements())
    comparison = hecke_check(s3, whole)
    assert all_passed(comparison.checks)
    assert comparison.double_coset_count == 1


def test_hecke_trivial_subgroup_recovers_group_algebra():
    z3 = build_group(3, [[1, 2, 0]])
    comparison = hecke_check(z3, trivial_subgroup(z3))
    assert all_passed(comparison.checks)
    assert comparison.double_coset_count == 3


def test_coset_catalog_diagonal_unit():
    # For the coset action the diagonal orbit is a single field: the unit
    # of B corresponds to the identity double coset.
    s3 = build_group(3, [[1, 0, 2], [0, 2, 1]])
    transposition = next(a for a in s3.elements() if s3.element_order(a) == 2)
    s = subgroup_closure(s3, [transposition])
    catalog = build_catalog(coset_nset(s3, s))
    assert catalog.diagonal_boundary_labels == ("b0",)
