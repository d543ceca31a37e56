"""Brute-force oracles, independent of the structure-constant code paths.

Every oracle recomputes a Hurwitz number from first principles — tuple
counting over the group, or integer matrix traces in the permutation model —
without touching the multiplication tables of ``A`` or ``B``.  Agreement with
:func:`cardyfrob.hurwitz.evaluate` is therefore a genuine cross-check, not a
tautology.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from math import prod
from typing import Sequence

from . import linalg
from .actions import FieldCatalog, InteriorField
from .cardy import CardyFrobeniusAlgebra
from .errors import InputError, ResourceError
from .frobenius import AlgebraElement, CheckResult
from .groups import FiniteGroup
from .hurwitz import SurfaceSpec

DEFAULT_TUPLE_BOUND = 10**8


@dataclass(frozen=True)
class OracleResult:
    """An oracle value plus the size of the tuple domain it stands for.

    ``tuples_examined`` reports the conceptual enumeration domain (the count
    the defining sum ranges over); implementations close the final factor by
    a precomputed table, so the work actually done is smaller by one |N|.
    The trace oracle does no tuple enumeration and reports 0.
    """

    value: Fraction
    tuples_examined: int


def _class_members(
    n_group: FiniteGroup, fields: Sequence[InteriorField]
) -> list[tuple[int, ...]]:
    for field in fields:
        if field.conjugacy_class.parent is not n_group:
            raise InputError(
                f"interior field {field.label} belongs to a different group"
            )
    return [field.members for field in fields]


def closed_orientable_oracle(
    n_group: FiniteGroup,
    genus: int,
    fields: Sequence[InteriorField],
    tuple_bound: int = DEFAULT_TUPLE_BOUND,
) -> OracleResult:
    """Count tuples ``a_1..a_m, x_1,y_1..x_g,y_g`` with product of the ``a_i``
    and the ``g`` commutators equal to the identity, divided by ``|N|``."""
    if genus < 0:
        raise InputError(f"genus must be nonnegative, got {genus}")
    members = _class_members(n_group, fields)
    order = n_group.order
    domain = prod(len(m) for m in members) * order ** (2 * genus)
    if domain > tuple_bound:
        raise ResourceError(
            f"oracle enumeration domain {domain} exceeds the bound {tuple_bound}"
        )
    table = n_group.table
    inverses = n_group.inverses
    count = 0
    if genus == 0:
        for choice in iter_product(*members):
            acc = 0
            for a in choice:
                acc = table[acc][a]
            count += acc == 0
    else:
        # Close the last commutator with a count table: for each target c,
        # how many pairs (x, y) have [x, y] = c.
        commutator_count = [0] * order
        commutator_of = [[0] * order for _ in range(order)]
        for x in range(order):
            for y in range(order):
                c = n_group.commutator(x, y)
                commutator_of[x][y] = c
                commutator_count[c] += 1
        middle = 2 * (genus - 1)
        for choice in iter_product(*members):
            base = 0
            for a in choice:
                base = table[base][a]
            for mids in iter_product(range(order), repeat=middle):
                acc = base
                for j in range(0, middle, 2):
                    acc = table[acc][commutator_of[mids[j]][mids[j + 1]]]
                count += commutator_count[inverses[acc]]
    return OracleResult(Fraction(count, order), domain)


def closed_nonorientable_oracle(
    n_group: FiniteGroup,
    crosscaps: int,
    fields: Sequence[InteriorField],
    tuple_bound: int = DEFAULT_TUPLE_BOUND,
) -> OracleResult:
    """Count tuples ``a_1..a_m, x_1..x_{2g}`` with ``a_1...a_m x_1^2...x_{2g}^2``
    equal to the identity, divided by ``|N|``."""
    if crosscaps < 1:
        raise InputError(f"crosscap count must be positive, got {crosscaps}")
    members = _class_members(n_group, fields)
    order = n_group.order
    domain = prod(len(m) for m in members) * order**crosscaps
    if domain > tuple_bound:
        raise ResourceError(
            f"oracle enumeration domain {domain} exceeds the bound {tuple_bound}"
        )
    table = n_group.table
    inverses = n_group.inverses
    square_count = [0] * order
    square_of = [0] * order
    for x in range(order):
        square = table[x][x]
        square_of[x] = square
        square_count[square] += 1
    count = 0
    for choice in iter_product(*members):
        base = 0
        for a in choice:
            base = table[base][a]
        for mids in iter_product(range(order), repeat=crosscaps - 1):
            acc = base
            for x in mids:
                acc = table[acc][square_of[x]]
            count += square_count[inverses[acc]]
    return OracleResult(Fraction(count, order), domain)


_IMAGE_CACHE: "weakref.WeakKeyDictionary[CardyFrobeniusAlgebra, dict[str, list[list[int]]]]"
_IMAGE_CACHE = weakref.WeakKeyDictionary()


def _rep_images(h: CardyFrobeniusAlgebra) -> dict[str, list[list[int]]]:
    """Integer matrices for K_A and U in the permutation model.

    Built from the catalog's automorphism orders and the plain matrices only:
    ``rho(K_A) = sum |Aut a| V_a V_{a*}`` and ``rho(U) = sum_n rho(n)^2``.
    """
    cached = _IMAGE_CACHE.get(h)
    if cached is not None:
        return cached
    size = h.reps.dimension
    ka = [[0] * size for _ in range(size)]
    for field in h.catalog.interior:
        product = linalg.mat_mul(
            h.reps.rho_class[field.label], h.reps.rho_class[field.star]
        )
        for i in range(size):
            row = product[i]
            target = ka[i]
            for j in range(size):
                if row[j]:
                    target[j] += field.aut_order * row[j]
    n_group = h.catalog.nset.group
    u = [[0] * size for _ in range(size)]
    for n in range(n_group.order):
        row = h.catalog.nset.act_table[n_group.mul(n, n)]
        for x in range(size):
            u[row[x]][x] += 1
    images = {"ka": ka, "u": u}
    _IMAGE_CACHE[h] = images
    return images


def _sandwiched(h: CardyFrobeniusAlgebra, word: list[list[int]]) -> list[list[int]]:
    """``sum_b |Aut b| nu(b) . word . nu(b*)`` — the Casimir legs around a word."""
    size = h.reps.dimension
    wrapped = [[0] * size for _ in range(size)]
    for field in h.catalog.boundary:
        product = linalg.mat_mul(
            h.reps.nu[field.label], linalg.mat_mul(word, h.reps.nu[field.star])
        )
        for i in range(size):
            row = product[i]
            target = wrapped[i]
            for j in range(size):
                if row[j]:
                    target[j] += field.aut_order * row[j]
    return wrapped


def trace_oracle(h: CardyFrobeniusAlgebra, spec: SurfaceSpec) -> OracleResult:
    """Evaluate a bounded surface as ``(1/|N|) tr`` of integer matrix products.

    Uses only the permutation-model matrices (``rho`` class sums, ``nu``
    orbit matrices, the images of :func:`_rep_images` and the
    :func:`_sandwiched` wrapping of every contour past the first); no
    structure constants of ``A`` or ``B`` are consulted.
    """
    spec.validate_against(h.catalog)
    if not spec.boundary:
        raise InputError("the trace oracle requires at least one boundary contour")
    images = _rep_images(h)
    size = h.reps.dimension
    matrix: list[list[int]] = [[int(i == j) for j in range(size)] for i in range(size)]
    for label in spec.interior:
        matrix = linalg.mat_mul(matrix, h.reps.rho_class[label])
    if spec.orientable:
        matrix = linalg.mat_mul(matrix, linalg.mat_pow(images["ka"], int(spec.genus)))
    else:
        matrix = linalg.mat_mul(matrix, linalg.mat_pow(images["u"], spec.crosscaps))
    for position, contour in enumerate(spec.boundary):
        word = [[int(i == j) for j in range(size)] for i in range(size)]
        for label in contour:
            word = linalg.mat_mul(word, h.reps.nu[label])
        if position:
            word = _sandwiched(h, word)
        matrix = linalg.mat_mul(matrix, word)
    value = Fraction(linalg.trace(matrix), h.catalog.nset.group.order)
    return OracleResult(value, 0)


def t_tensor_oracle(catalog: FieldCatalog, labels: Sequence[str]) -> OracleResult:
    """Count closed chains ``x_1 .. x_n`` with ``(x_i, x_{i+1})`` in the i-th
    orbit (cyclically), divided by ``|N|``; equals ``l_B`` of the product."""
    if not labels:
        raise InputError("the chain oracle needs at least one boundary label")
    fields = [catalog.boundary_field(label) for label in labels]
    successors: list[dict[int, list[int]]] = []
    for field in fields:
        succ: dict[int, list[int]] = {}
        for x, y in field.orbit:
            succ.setdefault(x, []).append(y)
        successors.append(succ)
    last_set = set(fields[-1].orbit)
    n = len(fields)
    size = catalog.nset.size
    total = 0
    for start in range(size):

        def chains(position: int, point: int) -> int:
            if position == n - 1:
                return 1 if (point, start) in last_set else 0
            return sum(
                chains(position + 1, nxt)
                for nxt in successors[position].get(point, ())
            )

        total += chains(0, start)
    value = Fraction(total, catalog.nset.group.order)
    return OracleResult(value, size**n)


def commutator_casimir_check(h: CardyFrobeniusAlgebra) -> CheckResult:
    """Preliminary identity behind the closed oracles: ``K_A = sum_{x,y} [x,y]``.

    The commutator tally over ``N x N``, regrouped into class sums, must equal
    the Casimir element of ``A``.
    """
    n_group = h.catalog.nset.group
    tally: dict[int, int] = {}
    for x in range(n_group.order):
        for y in range(n_group.order):
            c = n_group.commutator(x, y)
            tally[c] = tally.get(c, 0) + 1
    coeffs = {
        field.label: tally.get(field.representative, 0)
        for field in h.catalog.interior
    }
    expected = AlgebraElement({label: value for label, value in coeffs.items() if value})
    casimir = h.A.casimir()
    passed = casimir == expected
    witness = None if passed else f"K_A = {casimir!r} but the tally gives {expected!r}"
    return CheckResult("commutator-casimir", passed, witness)


def oracle_for_spec(
    h: CardyFrobeniusAlgebra,
    spec: SurfaceSpec,
    tuple_bound: int = DEFAULT_TUPLE_BOUND,
) -> OracleResult:
    """Dispatch to the oracle matching the surface's shape."""
    spec.validate_against(h.catalog)
    if spec.boundary:
        return trace_oracle(h, spec)
    fields = [h.catalog.interior_field(label) for label in spec.interior]
    n_group = h.catalog.nset.group
    if spec.orientable:
        return closed_orientable_oracle(
            n_group, int(spec.genus), fields, tuple_bound=tuple_bound
        )
    return closed_nonorientable_oracle(
        n_group, spec.crosscaps, fields, tuple_bound=tuple_bound
    )
