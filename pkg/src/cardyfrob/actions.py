"""Group actions on finite point sets and the field catalogs they induce.

Given a finite group ``G`` and a subgroup ``K``, the quotient
``N = N_G(K) / K`` acts by conjugation on the set ``X`` of all subgroups of
``G`` containing ``K``.  Interior fields are the conjugacy classes of ``N``;
boundary fields are the ``N``-orbits on ``X x X``.  Both carry canonical
labels (``a<k>`` and ``b<k>``), automorphism orders, and an involution
(``star``) coming from inversion respectively from swapping the two points
of a pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .errors import ConsistencyError, InputError
from .groups import (
    ConjugacyClass,
    FiniteGroup,
    Subgroup,
    centralizer,
    conjugacy_classes,
    is_core_free,
    normalizer,
    quotient_group,
    subgroups_containing,
)


@dataclass(frozen=True)
class NSet:
    """A finite group action: ``act_table[n][x]`` is the image of point ``x``.

    ``point_sets`` optionally records the underlying subsets of the parent
    group (subgroup element sets, coset element sets) that the points stand
    for.  Construction validates the action axioms exhaustively.
    """

    group: FiniteGroup
    act_table: tuple[tuple[int, ...], ...]
    point_sets: tuple[frozenset[int], ...] | None = None

    def __post_init__(self) -> None:
        group = self.group
        table = self.act_table
        if len(table) != group.order:
            raise ConsistencyError(
                f"action table has {len(table)} rows for a group of order {group.order}"
            )
        size = self.size
        for n, row in enumerate(table):
            if len(row) != size or sorted(row) != list(range(size)):
                raise ConsistencyError(f"action row {n} is not a permutation of the points")
        identity_row = table[0]
        for x in range(size):
            if identity_row[x] != x:
                raise ConsistencyError("the identity does not act trivially")
        for g in range(group.order):
            row_g = table[g]
            for h in range(group.order):
                row_h = table[h]
                row_gh = table[group.mul(g, h)]
                if any(row_g[row_h[x]] != row_gh[x] for x in range(size)):
                    raise ConsistencyError(
                        f"action is not compatible with the product at ({g}, {h})"
                    )
        if self.point_sets is not None and len(self.point_sets) != size:
            raise ConsistencyError("point_sets length does not match the number of points")

    @property
    def size(self) -> int:
        return len(self.act_table[0]) if self.act_table else 0

    def act(self, n: int, x: int) -> int:
        return self.act_table[n][x]

    def fixed_point_count(self, n: int) -> int:
        row = self.act_table[n]
        return sum(1 for x in range(len(row)) if row[x] == x)

    def orbit_of_pair(self, pair: tuple[int, int]) -> frozenset[tuple[int, int]]:
        x, y = pair
        return frozenset((row[x], row[y]) for row in self.act_table)


@dataclass(frozen=True, eq=False)
class ConjugationSetup:
    """Everything derived from a pair (G, K) before algebra construction."""

    group: FiniteGroup
    k: Subgroup
    k_normalizer: Subgroup
    n_group: FiniteGroup
    projection: Mapping[int, int]
    subgroups: tuple[Subgroup, ...]
    nset: NSet
    k_core_free: bool
    digest: str = ""

    @property
    def x_orders(self) -> tuple[int, ...]:
        return tuple(s.order for s in self.subgroups)


def build_conjugation_setup(
    group: FiniteGroup, k: Subgroup, digest: str = ""
) -> ConjugationSetup:
    """Assemble ``N = N_G(K)/K`` with its conjugation action on ``X``."""
    if k.parent is not group:
        raise InputError("the subgroup does not belong to the given group")
    k_normalizer = normalizer(group, k)
    n_group, projection = quotient_group(k_normalizer, k)
    subgroups = subgroups_containing(group, k)
    point_index = {s.member_set(): position for position, s in enumerate(subgroups)}
    reps = _coset_representatives(projection, n_group.order)
    act_rows = []
    for rep in reps:
        row = []
        for s in subgroups:
            image = frozenset(group.conjugate(rep, x) for x in s.elements)
            target = point_index.get(image)
            if target is None:
                raise ConsistencyError(
                    "conjugating a subgroup over K left the subgroup catalog"
                )
            row.append(target)
        act_rows.append(tuple(row))
    act_table = tuple(act_rows)
    # The action must not depend on the choice of coset representative.
    for h in k_normalizer.elements:
        expected = act_table[projection[h]]
        for position, s in enumerate(subgroups):
            image = frozenset(group.conjugate(h, x) for x in s.elements)
            if point_index[image] != expected[position]:
                raise ConsistencyError(
                    f"conjugation action is not well defined on cosets at element {h}"
                )
    nset = NSet(
        group=n_group,
        act_table=act_table,
        point_sets=tuple(s.member_set() for s in subgroups),
    )
    return ConjugationSetup(
        group=group,
        k=k,
        k_normalizer=k_normalizer,
        n_group=n_group,
        projection=dict(projection),
        subgroups=subgroups,
        nset=nset,
        k_core_free=is_core_free(group, k),
        digest=digest,
    )


def _coset_representatives(projection: Mapping[int, int], count: int) -> list[int]:
    reps = [-1] * count
    for element, coset in projection.items():
        if reps[coset] < 0 or element < reps[coset]:
            reps[coset] = element
    if any(rep < 0 for rep in reps):
        raise ConsistencyError("projection does not cover every coset")
    return reps


def conjugation_nset(group: FiniteGroup, k: Subgroup) -> NSet:
    return build_conjugation_setup(group, k).nset


def coset_nset(group: FiniteGroup, s: Subgroup) -> NSet:
    """The left translation action of ``group`` on the cosets ``g S``.

    Points are numbered by the smallest element of the coset, so the coset
    ``S`` itself is point 0.
    """
    if s.parent is not group:
        raise InputError("the subgroup does not belong to the given group")
    coset_of: dict[int, int] = {}
    cosets: list[tuple[int, ...]] = []
    for g in range(group.order):
        if g in coset_of:
            continue
        coset = tuple(sorted(group.table[g][x] for x in s.elements))
        for member in coset:
            coset_of[member] = len(cosets)
        cosets.append(coset)
    act_table = tuple(
        tuple(coset_of[group.table[h][coset[0]]] for coset in cosets)
        for h in range(group.order)
    )
    return NSet(
        group=group,
        act_table=act_table,
        point_sets=tuple(frozenset(coset) for coset in cosets),
    )


@dataclass(frozen=True)
class InteriorField:
    """An interior field: a conjugacy class of ``N`` with its attached data.

    ``aut_order`` is the order of the centralizer of the representative,
    ``star`` the label of the class of inverses, and ``d`` the number of
    square roots of the representative's inverse in ``N``.
    """

    label: str
    conjugacy_class: ConjugacyClass
    aut_order: int
    star: str
    d: int

    @property
    def size(self) -> int:
        return self.conjugacy_class.size

    @property
    def members(self) -> tuple[int, ...]:
        return self.conjugacy_class.members

    @property
    def representative(self) -> int:
        return self.conjugacy_class.representative


@dataclass(frozen=True)
class BoundaryField:
    """A boundary field: an ``N``-orbit on ordered pairs of points of ``X``.

    ``aut_order`` is the order of the stabilizer of any pair in the orbit and
    ``star`` the label of the orbit of swapped pairs.
    """

    label: str
    representative: tuple[int, int]
    orbit: tuple[tuple[int, int], ...]
    aut_order: int
    star: str

    @property
    def size(self) -> int:
        return len(self.orbit)

    @property
    def is_diagonal(self) -> bool:
        return self.representative[0] == self.representative[1]


@dataclass(frozen=True, eq=False)
class FieldCatalog:
    """The labeled interior and boundary fields of one group action."""

    nset: NSet
    interior: tuple[InteriorField, ...]
    boundary: tuple[BoundaryField, ...]
    provenance: str = ""

    @cached_property
    def _interior_by_label(self) -> dict[str, InteriorField]:
        return {field.label: field for field in self.interior}

    @cached_property
    def _boundary_by_label(self) -> dict[str, BoundaryField]:
        return {field.label: field for field in self.boundary}

    @cached_property
    def _orbit_label_of_pair(self) -> dict[tuple[int, int], str]:
        lookup: dict[tuple[int, int], str] = {}
        for field in self.boundary:
            for pair in field.orbit:
                lookup[pair] = field.label
        return lookup

    def interior_field(self, label: str) -> InteriorField:
        try:
            return self._interior_by_label[label]
        except KeyError:
            raise InputError(f"unknown interior field label {label!r}") from None

    def boundary_field(self, label: str) -> BoundaryField:
        try:
            return self._boundary_by_label[label]
        except KeyError:
            raise InputError(f"unknown boundary field label {label!r}") from None

    def pair_label(self, pair: tuple[int, int]) -> str:
        try:
            return self._orbit_label_of_pair[pair]
        except KeyError:
            raise InputError(f"pair {pair!r} is not a pair of points of X") from None

    @property
    def interior_labels(self) -> tuple[str, ...]:
        return tuple(field.label for field in self.interior)

    @property
    def boundary_labels(self) -> tuple[str, ...]:
        return tuple(field.label for field in self.boundary)

    @cached_property
    def identity_interior_label(self) -> str:
        for field in self.interior:
            if field.conjugacy_class.representative == 0:
                return field.label
        raise ConsistencyError("no interior field contains the identity")

    @property
    def diagonal_boundary_labels(self) -> tuple[str, ...]:
        return tuple(field.label for field in self.boundary if field.is_diagonal)


def build_catalog(nset: NSet, provenance: str = "") -> FieldCatalog:
    """Enumerate and label interior and boundary fields of an action.

    Interior fields follow the conjugacy class order of the acting group;
    boundary orbits are labeled ``b<k>`` in order of their smallest pair.
    The Burnside count ``(1/|N|) * sum of squared fixed-point counts`` must
    equal the number of boundary orbits, and is verified here.
    """
    group = nset.group
    classes = conjugacy_classes(group)
    rep_to_label = {cls.representative: cls.label for cls in classes}
    member_to_rep = {}
    for cls in classes:
        for member in cls.members:
            member_to_rep[member] = cls.representative
    interior = []
    for cls in classes:
        rep = cls.representative
        inverse_rep = member_to_rep[group.inv(rep)]
        d = sum(1 for n in range(group.order) if group.mul(n, n) == group.inv(rep))
        interior.append(
            InteriorField(
                label=cls.label,
                conjugacy_class=cls,
                aut_order=centralizer(group, rep).order,
                star=rep_to_label[inverse_rep],
                d=d,
            )
        )
    size = nset.size
    orbit_index: dict[tuple[int, int], int] = {}
    orbits: list[tuple[tuple[int, int], ...]] = []
    for x in range(size):
        for y in range(size):
            if (x, y) in orbit_index:
                continue
            orbit = sorted({(row[x], row[y]) for row in nset.act_table})
            position = len(orbits)
            for pair in orbit:
                orbit_index[pair] = position
            orbits.append(tuple(orbit))
    boundary = []
    for position, orbit in enumerate(orbits):
        if group.order % len(orbit) != 0:
            raise ConsistencyError(f"orbit size {len(orbit)} does not divide |N|")
        rep = orbit[0]
        swapped = orbit_index[(rep[1], rep[0])]
        boundary.append(
            BoundaryField(
                label=f"b{position}",
                representative=rep,
                orbit=orbit,
                aut_order=group.order // len(orbit),
                star=f"b{swapped}",
            )
        )
    burnside = sum(nset.fixed_point_count(n) ** 2 for n in range(group.order))
    if burnside != group.order * len(orbits):
        raise ConsistencyError(
            f"Burnside count {burnside}/{group.order} does not match {len(orbits)} orbits"
        )
    return FieldCatalog(
        nset=nset,
        interior=tuple(interior),
        boundary=tuple(boundary),
        provenance=provenance,
    )
