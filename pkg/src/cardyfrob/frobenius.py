"""Equipped Frobenius algebras over exact rationals.

An equipped Frobenius algebra is a finite-dimensional unital associative
algebra with a linear form ``l`` whose pairing ``(x, y) = l(x y)`` is
symmetric and nondegenerate, together with an involutive anti-automorphism
``*`` preserving ``l``.  Scalars are :class:`fractions.Fraction` throughout,
so every verification below is an exact identity, never a numerical one.

Structure constants are stored sparsely: a basis-pair product that is zero
simply has no entry.  All axiom checks walk only the stored entries plus the
index ranges they force, which keeps verification fast even for algebras with
a hundred-plus basis vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import linalg
from .errors import ConsistencyError, InputError
from .rationals import format_fraction


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named verification, with a witness when it fails."""

    name: str
    passed: bool
    witness: str | None = None


def all_passed(results: Iterable[CheckResult]) -> bool:
    return all(result.passed for result in results)


def failures(results: Iterable[CheckResult]) -> list[CheckResult]:
    return [result for result in results if not result.passed]


class AlgebraElement:
    """A finite rational linear combination of basis labels.

    Zero coefficients are dropped on construction, so equality of elements is
    plain dictionary equality.  Scalar arithmetic lives here; products of two
    elements need an algebra and live on
    :meth:`EquippedFrobeniusAlgebra.multiply`.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[str, Fraction | int] | None = None) -> None:
        items = coeffs.items() if coeffs else ()
        self.coeffs: dict[str, Fraction] = {
            label: Fraction(value) for label, value in items if value
        }

    def coefficient(self, label: str) -> Fraction:
        return self.coeffs.get(label, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        merged = dict(self.coeffs)
        for label, value in other.coeffs.items():
            merged[label] = merged.get(label, Fraction(0)) + value
        return AlgebraElement(merged)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        merged = dict(self.coeffs)
        for label, value in other.coeffs.items():
            merged[label] = merged.get(label, Fraction(0)) - value
        return AlgebraElement(merged)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement({label: -value for label, value in self.coeffs.items()})

    def __mul__(self, scalar: Fraction | int) -> "AlgebraElement":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return AlgebraElement(
            {label: value * scalar for label, value in self.coeffs.items()}
        )

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = [
            f"{format_fraction(value)}*{label}"
            for label, value in sorted(self.coeffs.items())
        ]
        return " + ".join(parts)


class EquippedFrobeniusAlgebra:
    """A unital algebra with invariant pairing and star, on a labeled basis.

    Parameters take labels throughout: ``products`` maps a pair of basis
    labels to the (sparse) expansion of their product, ``linear_form`` maps
    labels to ``l`` values, ``involution`` maps each label to the label of its
    star, and ``unit`` is the coefficient mapping of the identity element.
    Construction validates shapes only; the axioms themselves are verified by
    :func:`verify_equipped`, which reports rather than raises so that a broken
    candidate algebra can be inspected.
    """

    def __init__(
        self,
        basis: Sequence[str],
        products: Mapping[tuple[str, str], Mapping[str, Fraction | int]],
        linear_form: Mapping[str, Fraction | int],
        involution: Mapping[str, str],
        unit: Mapping[str, Fraction | int],
    ) -> None:
        self.basis: tuple[str, ...] = tuple(basis)
        if len(set(self.basis)) != len(self.basis):
            raise InputError("basis labels must be unique")
        if not self.basis:
            raise InputError("an algebra needs at least one basis vector")
        self.dim = len(self.basis)
        self._index: dict[str, int] = {label: i for i, label in enumerate(self.basis)}
        n = self.dim
        self._products: dict[int, dict[int, Fraction]] = {}
        for (left, right), expansion in products.items():
            i, j = self.index(left), self.index(right)
            cleaned = {
                self.index(out): Fraction(value)
                for out, value in expansion.items()
                if value
            }
            if cleaned:
                self._products[i * n + j] = cleaned
        unknown = set(linear_form) - set(self.basis)
        if unknown:
            raise InputError(f"linear form uses unknown labels: {sorted(unknown)}")
        self.linear_form: tuple[Fraction, ...] = tuple(
            Fraction(linear_form.get(label, 0)) for label in self.basis
        )
        if sorted(involution) != sorted(self.basis) or set(involution.values()) != set(
            self.basis
        ):
            raise InputError("involution must be a bijection on the basis labels")
        self.involution: tuple[int, ...] = tuple(
            self.index(involution[label]) for label in self.basis
        )
        self.unit: AlgebraElement = self.element(unit)
        self.form: tuple[tuple[Fraction, ...], ...] = self._compute_form()
        self._form_inverse: list[list[Fraction]] | None = None
        self._casimir: AlgebraElement | None = None
        self._twisted_casimir: AlgebraElement | None = None

    # -- basic accessors -------------------------------------------------

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"unknown basis label {label!r}") from None

    def basis_element(self, label: str) -> AlgebraElement:
        self.index(label)
        return AlgebraElement({label: 1})

    def element(self, coeffs: Mapping[str, Fraction | int]) -> AlgebraElement:
        for label in coeffs:
            self.index(label)
        return AlgebraElement(coeffs)

    def zero(self) -> AlgebraElement:
        return AlgebraElement()

    def pair_products(self, i: int, j: int) -> Mapping[int, Fraction]:
        """Sparse expansion of ``basis[i] * basis[j]`` in index space."""
        return self._products.get(i * self.dim + j, {})

    def structure_constant(self, left: str, right: str, out: str) -> Fraction:
        expansion = self.pair_products(self.index(left), self.index(right))
        return expansion.get(self.index(out), Fraction(0))

    # -- algebra operations ----------------------------------------------

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        n = self.dim
        accumulated: dict[int, Fraction] = {}
        for left, a in x.coeffs.items():
            i = self.index(left)
            base = i * n
            for right, b in y.coeffs.items():
                expansion = self._products.get(base + self.index(right))
                if not expansion:
                    continue
                scale = a * b
                for out, value in expansion.items():
                    accumulated[out] = accumulated.get(out, Fraction(0)) + scale * value
        return AlgebraElement(
            {self.basis[out]: value for out, value in accumulated.items()}
        )

    def product(self, factors: Iterable[AlgebraElement]) -> AlgebraElement:
        result = self.unit
        for factor in factors:
            result = self.multiply(result, factor)
        return result

    def power(self, x: AlgebraElement, exponent: int) -> AlgebraElement:
        if exponent < 0:
            raise InputError("negative powers are not defined here")
        result = self.unit
        for _ in range(exponent):
            result = self.multiply(result, x)
        return result

    def linear(self, x: AlgebraElement) -> Fraction:
        return sum(
            (value * self.linear_form[self.index(label)] for label, value in x.coeffs.items()),
            Fraction(0),
        )

    def bilinear(self, x: AlgebraElement, y: AlgebraElement) -> Fraction:
        return self.linear(self.multiply(x, y))

    def star(self, x: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(
            {
                self.basis[self.involution[self.index(label)]]: value
                for label, value in x.coeffs.items()
            }
        )

    def star_label(self, label: str) -> str:
        return self.basis[self.involution[self.index(label)]]

    # -- pairing and Casimir ----------------------------------------------

    def _compute_form(self) -> tuple[tuple[Fraction, ...], ...]:
        n = self.dim
        form = [[Fraction(0)] * n for _ in range(n)]
        for code, expansion in self._products.items():
            i, j = divmod(code, n)
            total = Fraction(0)
            for out, value in expansion.items():
                weight = self.linear_form[out]
                if weight:
                    total += value * weight
            form[i][j] = total
        return tuple(tuple(row) for row in form)

    def form_inverse(self) -> list[list[Fraction]]:
        if self._form_inverse is None:
            try:
                self._form_inverse = linalg.invert(self.form)
            except linalg.SingularMatrixError as exc:
                raise ConsistencyError(f"the pairing is degenerate: {exc}") from exc
        return self._form_inverse

    def casimir(self) -> AlgebraElement:
        """The Casimir element ``sum_{i,j} (F^-1)_{ij} e_i e_j``."""
        if self._casimir is None:
            self._casimir = self._casimir_sum(twisted=False)
        return self._casimir

    def twisted_casimir(self) -> AlgebraElement:
        """The star-twisted Casimir ``sum_{i,j} (F^-1)_{ij} e_i e_j^*``."""
        if self._twisted_casimir is None:
            self._twisted_casimir = self._casimir_sum(twisted=True)
        return self._twisted_casimir

    def casimir_sandwich(self, x: AlgebraElement) -> AlgebraElement:
        """The sandwich ``sum_{i,j} (F^-1)_{ij} e_i x e_j``.

        The two legs of the Casimir tensor land on opposite sides of ``x``.
        The image is always central, ``casimir_sandwich(xy) ==
        casimir_sandwich(yx)``, and the image of the unit is :meth:`casimir`.
        """
        inverse = self.form_inverse()
        total = AlgebraElement()
        for i, label in enumerate(self.basis):
            left = self.multiply(self.basis_element(label), x)
            if left.is_zero():
                continue
            for j, weight in enumerate(inverse[i]):
                if not weight:
                    continue
                right = self.multiply(left, self.basis_element(self.basis[j]))
                total = total + weight * right
        return total

    def _casimir_sum(self, twisted: bool) -> AlgebraElement:
        inverse = self.form_inverse()
        n = self.dim
        accumulated: dict[int, Fraction] = {}
        for i in range(n):
            row = inverse[i]
            base = i * n
            for j in range(n):
                weight = row[j]
                if not weight:
                    continue
                column = self.involution[j] if twisted else j
                expansion = self._products.get(base + column)
                if not expansion:
                    continue
                for out, value in expansion.items():
                    accumulated[out] = accumulated.get(out, Fraction(0)) + weight * value
        return AlgebraElement(
            {self.basis[out]: value for out, value in accumulated.items()}
        )

    def dual_reconstruct(self, x: AlgebraElement) -> AlgebraElement:
        """Expand ``x`` through the dual basis: ``sum_{i,j} (x,e_i) F^-1_{ij} e_j``."""
        inverse = self.form_inverse()
        n = self.dim
        pairings = [
            self.bilinear(x, self.basis_element(label)) for label in self.basis
        ]
        coeffs: dict[str, Fraction] = {}
        for j in range(n):
            total = sum(
                (pairings[i] * inverse[i][j] for i in range(n) if pairings[i]),
                Fraction(0),
            )
            if total:
                coeffs[self.basis[j]] = total
        return AlgebraElement(coeffs)

    def permuted(self, order: Sequence[str]) -> "EquippedFrobeniusAlgebra":
        """The same algebra presented on a reordered basis."""
        if sorted(order) != sorted(self.basis):
            raise InputError("order must be a permutation of the basis labels")
        n = self.dim
        products: dict[tuple[str, str], dict[str, Fraction]] = {}
        for code, expansion in self._products.items():
            i, j = divmod(code, n)
            products[(self.basis[i], self.basis[j])] = {
                self.basis[out]: value for out, value in expansion.items()
            }
        return EquippedFrobeniusAlgebra(
            basis=order,
            products=products,
            linear_form={
                label: self.linear_form[self.index(label)] for label in self.basis
            },
            involution={label: self.star_label(label) for label in self.basis},
            unit=dict(self.unit.coeffs),
        )


# -- axiom verification ----------------------------------------------------


def verify_equipped(alg: EquippedFrobeniusAlgebra) -> list[CheckResult]:
    """Check every equipped-Frobenius axiom, reporting one result per axiom.

    Checks are exact; a failing check carries a human-readable witness (the
    basis labels at which the identity first breaks).
    """
    return [
        _check_unit(alg),
        _check_associativity(alg),
        _check_form_symmetric(alg),
        _check_form_invertible(alg),
        _check_form_invariance(alg),
        _check_involution_involutive(alg),
        _check_involution_antiautomorphism(alg),
        _check_involution_form(alg),
        _check_casimir_central(alg),
        _check_dual_reconstruction(alg),
    ]


def _check_unit(alg: EquippedFrobeniusAlgebra) -> CheckResult:
    for label in alg.basis:
        e = alg.basis_element(label)
        if alg.multiply(alg.unit, e) != e or alg.multiply(e, alg.unit) != e:
            return CheckResult("unit", False, f"unit fails on {label}")
    return CheckResult("unit", True)


def _check_associativity(alg: EquippedFrobeniusAlgebra) -> CheckResult:
    n = alg.dim
    products = alg._products
    get = products.get
    for i in range(n):
        base_i = i * n
        for j in range(n):
            pij = get(base_i + j)
            base_j = j * n
            for k in range(n):
                pjk = get(base_j + k)
                if pij is None and pjk is None:
                    continue
                lhs: dict[int, Fraction] = {}
                if pij:
                    for m, c in pij.items():
                        pmk = get(m * n + k)
                        if pmk:
                            for out, value in pmk.items():
                                lhs[out] = lhs.get(out, Fraction(0)) + c * value
                rhs: dict[int, Fraction] = {}
                if pjk:
                    for m, c in pjk.items():
                        pim = get(base_i + m)
                        if pim:
                            for out, value in pim.items():
                                rhs[out] = rhs.get(out, Fraction(0)) + c * value
                if {o: v for o, v in lhs.items() if v} != {o: v for o, v in rhs.items() if v}:
                    witness = f"({alg.basis[i]}, {alg.basis[j]}, {alg.basis[k]})"
                    return CheckResult("associativity", False, witness)
    return CheckResult("associativity", True)


def _check_form_symmetric(alg: EquippedFrobeniusAlgebra) -> CheckResult:
    for i in range(alg.dim):
        for j in range(i):
            if alg.form[i][j] != alg.form[j][i]:
                witness = f"({alg.basis[i]}, {alg.basis[j]})"
                return CheckResult("form-symmetric", False, witness)
    return CheckResult("form-symmetric", True)


def _check_form_invertible(alg: EquippedFrobeniusAlgebra) -> CheckResult:
    try:
        alg.form_inverse()
    except ConsistencyError as exc:
        return CheckResult("form-invertible", False, str(exc))
    return CheckResult("form-invertible", True)


def _check_form_invariance(alg: EquippedFrobeniusAlgebra) -> CheckResult:
    # l((e_i e_j) e_k) == l(e_i (e_j e_k)) for all basis triples.
    n = alg.dim
    products = alg._products
    get = products.get
    form = alg.form
    for i in range(n):
        base_i = i * n
        form_i = form[i]
        for j in range(n):
            pij = get(base_i + j)
            base_j = j * n
            for k in range(n):
                pjk = get(base_j + k)
                if pij is None and pjk is None:
                    continue
                lhs = Fraction(0)
                if pij:
                    for m, c in pij.items():
                        entry = form[m][k]
                        if entry:
                            lhs += c * entry
                rhs = Fraction(0)
                if pjk:
                    for m, c in pjk.items():
                        entry = form_i[m]
                        if entry:
                            rhs += c * entry
                if lhs != rhs:
                    witness = f"({alg.basis[i]}, {alg.basis[j]}, {alg.basis[k]})"
                    return CheckResult("form-invariance", False, witness)
    return CheckResult("form-invariance", True)


def _check_involution_involutive(alg: EquippedFrobeniusAlgebra) -> CheckResult:
    for i in range(alg.dim):
        if alg.involution[alg.involution[i]] != i:
            return CheckResult("involution-involutive", False, alg.basis[i])
    return CheckResult("involution-involutive", True)


def _check_involution_antiautomorphism(alg: EquippedFrobeniusAlgebra) -> CheckResult:
    # (e_i e_j)^* == e_j^* e_i^* for all basis pairs, walking stored products.
    n = alg.dim
    involution = alg.involution
    for i in range(n):
        for j in range(n):
            expansion = alg.pair_products(i, j)
            starred = {involution[out]: value for out, value in expansion.items()}
            swapped = alg.pair_products(involution[j], involution[i])
            if starred != dict(swapped):
                witness = f"({alg.basis[i]}, {alg.basis[j]})"
                return CheckResult("involution-antiautomorphism", False, witness)
    return CheckResult("involution-antiautomorphism", True)


def _check_involution_form(alg: EquippedFrobeniusAlgebra) -> CheckResult:
    for i in range(alg.dim):
        if alg.linear_form[alg.involution[i]] != alg.linear_form[i]:
            return CheckResult("involution-form", False, alg.basis[i])
    return CheckResult("involution-form", True)


def _check_casimir_central(alg: EquippedFrobeniusAlgebra) -> CheckResult:
    try:
        casimir = alg.casimir()
    except ConsistencyError as exc:
        return CheckResult("casimir-central", False, str(exc))
    for label in alg.basis:
        e = alg.basis_element(label)
        if alg.multiply(casimir, e) != alg.multiply(e, casimir):
            return CheckResult("casimir-central", False, label)
    return CheckResult("casimir-central", True)


def _check_dual_reconstruction(alg: EquippedFrobeniusAlgebra) -> CheckResult:
    # Spot-check the dual-basis expansion on the unit and a slice of the
    # basis; the full property is exercised separately on small algebras.
    try:
        probes = [("1", alg.unit)] + [
            (label, alg.basis_element(label)) for label in alg.basis[:8]
        ]
        for name, probe in probes:
            if alg.dual_reconstruct(probe) != probe:
                return CheckResult("dual-reconstruction", False, name)
    except ConsistencyError as exc:
        return CheckResult("dual-reconstruction", False, str(exc))
    return CheckResult("dual-reconstruction", True)


# -- derived structure -------------------------------------------------------


def trace_form(alg: EquippedFrobeniusAlgebra) -> list[list[Fraction]]:
    """The trace form ``t_{ij} = trace of left multiplication by e_i e_j``.

    Computed sparsely as ``t_{ij} = sum_{k,m} c_{ik}^m c_{jm}^k``.
    """
    n = alg.dim
    buckets: dict[int, list[tuple[int, Fraction]]] = {}
    for code, expansion in alg._products.items():
        j, m = divmod(code, n)
        for k, value in expansion.items():
            buckets.setdefault(m * n + k, []).append((j, value))
    result = [[Fraction(0)] * n for _ in range(n)]
    for code, expansion in alg._products.items():
        i, k = divmod(code, n)
        row = result[i]
        for m, c in expansion.items():
            for j, value in buckets.get(m * n + k, ()):
                row[j] += c * value
    return result


def is_semisimple(alg: EquippedFrobeniusAlgebra) -> bool:
    """Whether the trace form is nondegenerate (semisimplicity over the rationals)."""
    return linalg.has_full_rank(trace_form(alg))


def center_dimension(alg: EquippedFrobeniusAlgebra) -> int:
    """Dimension of the center, by exact elimination of the commutant system.

    An element ``z`` is central iff for all ``j, k``:
    ``sum_i z_i (c_{ij}^k - c_{ji}^k) = 0``.  The sparse rows of that system
    are eliminated incrementally, keeping only independent pivot rows.
    """
    n = alg.dim
    rows: dict[int, dict[int, Fraction]] = {}
    for code, expansion in alg._products.items():
        i, j = divmod(code, n)
        for k, value in expansion.items():
            row = rows.setdefault(j * n + k, {})
            row[i] = row.get(i, Fraction(0)) + value
            row = rows.setdefault(i * n + k, {})
            row[j] = row.get(j, Fraction(0)) - value
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for row in rows.values():
        work = {col: value for col, value in row.items() if value}
        while work:
            lead = min(work)
            pivot = pivots.get(lead)
            if pivot is None:
                scale = work[lead]
                pivots[lead] = {col: value / scale for col, value in work.items()}
                rank += 1
                break
            factor = work[lead]
            for col, value in pivot.items():
                updated = work.get(col, Fraction(0)) - factor * value
                if updated:
                    work[col] = updated
                else:
                    work.pop(col, None)
        if rank == n:
            break
    return n - rank
