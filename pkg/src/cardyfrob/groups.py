"""Finite groups as dense Cayley tables.

Elements are the indices ``0 .. order-1`` with ``0`` always the identity.
Groups are produced by breadth-first closure of permutation generators, so
element numbering is deterministic: the identity first, then words in the
generators in discovery order.  Subgroups, conjugacy classes, centralizers,
normalizers, quotients and the interval of subgroups above a fixed subgroup
are all computed by exhaustive algorithms, which is the right trade at the
group orders this package targets (a few thousand at most).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import ConsistencyError, InputError, ResourceError

Perm = tuple[int, ...]

DEFAULT_ORDER_BOUND = 2000


def compose(p: Perm, q: Perm) -> Perm:
    """Compose permutations, applying ``q`` first: ``(p * q)(x) = p(q(x))``."""
    return tuple(p[q[x]] for x in range(len(q)))


def cycle_notation(perm: Perm) -> str:
    """Render a permutation in cycle notation, ``'e'`` for the identity."""
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            continue
        cycle = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            seen[nxt] = True
            cycle.append(nxt)
            nxt = perm[nxt]
        parts.append("(" + " ".join(str(point) for point in cycle) + ")")
    return "".join(parts) if parts else "e"


class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``table[a][b]`` is the product ``a * b``.  The constructor checks the
    cheap structural facts (square shape, identity row and column, rows and
    columns are permutations, hence two-sided inverses exist); associativity
    is the builder's responsibility and is what the exhaustive
    :func:`is_associative` helper is for in tests.
    """

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        names: Sequence[str] | None = None,
        perms: Sequence[Perm] | None = None,
    ) -> None:
        self.order = len(table)
        if self.order == 0:
            raise InputError("a group must have at least the identity element")
        self.table: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in table)
        full = set(range(self.order))
        for a, row in enumerate(self.table):
            if len(row) != self.order:
                raise InputError(f"table row {a} has length {len(row)}, expected {self.order}")
            if set(row) != full:
                raise InputError(f"table row {a} is not a permutation of the elements")
        for b in range(self.order):
            if {row[b] for row in self.table} != full:
                raise InputError(f"table column {b} is not a permutation of the elements")
        for a in range(self.order):
            if self.table[0][a] != a or self.table[a][0] != a:
                raise InputError("element 0 is not a two-sided identity")
        self.inverses: tuple[int, ...] = tuple(row.index(0) for row in self.table)
        if names is None:
            names = [f"g{a}" for a in range(self.order)]
        if len(names) != self.order:
            raise InputError(f"got {len(names)} element names for {self.order} elements")
        self.names: tuple[str, ...] = tuple(names)
        self.perms: tuple[Perm, ...] | None = tuple(perms) if perms is not None else None

    identity = 0

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conjugate(self, h: int, x: int) -> int:
        """Return ``h x h^-1``."""
        return self.table[self.table[h][x]][self.inverses[h]]

    def commutator(self, x: int, y: int) -> int:
        """Return ``x y x^-1 y^-1``."""
        return self.table[self.table[x][y]][self.inverses[self.table[y][x]]]

    def element_order(self, a: int) -> int:
        power, n = a, 1
        while power != 0:
            power = self.table[power][a]
            n += 1
        return n

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


def build_group(
    degree: int,
    generators: Sequence[Sequence[int]],
    order_bound: int = DEFAULT_ORDER_BOUND,
) -> FiniteGroup:
    """Close a set of permutation generators into a full Cayley table.

    The closure is breadth-first from the identity, multiplying each frontier
    element on the right by the generators in input order, so the element
    numbering is reproducible.  Exceeding ``order_bound`` elements raises
    :class:`ResourceError`.
    """
    if degree < 1:
        raise InputError(f"degree must be positive, got {degree}")
    gens: list[Perm] = []
    for pos, gen in enumerate(generators):
        perm = tuple(gen)
        if sorted(perm) != list(range(degree)):
            raise InputError(f"generators[{pos}] is not a permutation of 0..{degree - 1}")
        gens.append(perm)
    identity = tuple(range(degree))
    elements: list[Perm] = [identity]
    index: dict[Perm, int] = {identity: 0}
    head = 0
    while head < len(elements):
        current = elements[head]
        head += 1
        for gen in gens:
            product = compose(current, gen)
            if product not in index:
                if len(elements) >= order_bound:
                    raise ResourceError(
                        f"group closure exceeded the order bound {order_bound}"
                    )
                index[product] = len(elements)
                elements.append(product)
    table = [
        [index[compose(left, right)] for right in elements]
        for left in elements
    ]
    names = [cycle_notation(perm) for perm in elements]
    return FiniteGroup(table, names=names, perms=elements)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of ``parent`` as a sorted tuple of element indices.

    ``id`` is the subgroup's position in a canonical enumeration when one is
    in force (see :func:`subgroups_containing`) and ``None`` otherwise.
    """

    parent: FiniteGroup
    elements: tuple[int, ...]
    id: int | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def member_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def __repr__(self) -> str:
        tag = f", id={self.id}" if self.id is not None else ""
        return f"Subgroup(order={self.order}{tag})"


def _close_under_products(group: FiniteGroup, seed: Iterable[int]) -> frozenset[int]:
    current = {0, *seed}
    frontier = set(current)
    table = group.table
    while frontier:
        fresh = set()
        for a in current:
            row = table[a]
            for b in frontier:
                product = row[b]
                if product not in current:
                    fresh.add(product)
        for a in frontier:
            row = table[a]
            for b in current:
                product = row[b]
                if product not in current:
                    fresh.add(product)
        current |= fresh
        frontier = fresh
    return frozenset(current)


def subgroup_closure(group: FiniteGroup, generators: Iterable[int]) -> Subgroup:
    """The subgroup generated by the given element indices."""
    seed = list(generators)
    for x in seed:
        if not 0 <= x < group.order:
            raise InputError(f"element index {x} is out of range for a group of order {group.order}")
    return Subgroup(group, tuple(sorted(_close_under_products(group, seed))))


def subgroup_from_elements(group: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    """Validate that a set of element indices is a subgroup and wrap it up."""
    members = sorted(set(elements))
    member_set = set(members)
    if 0 not in member_set:
        raise InputError("a subgroup must contain the identity element 0")
    for x in members:
        if not 0 <= x < group.order:
            raise InputError(f"element index {x} is out of range for a group of order {group.order}")
        if group.inv(x) not in member_set:
            raise InputError(f"subgroup is not closed under inversion at element {x}")
        row = group.table[x]
        for y in members:
            if row[y] not in member_set:
                raise InputError(f"subgroup is not closed under products at ({x}, {y})")
    if group.order % len(members) != 0:
        raise InputError(
            f"subgroup size {len(members)} does not divide the group order {group.order}"
        )
    return Subgroup(group, tuple(members))


def trivial_subgroup(group: FiniteGroup) -> Subgroup:
    return Subgroup(group, (0,))


@dataclass(frozen=True)
class ConjugacyClass:
    """A conjugacy class with its canonical label ``a<k>``.

    Classes of a group are enumerated sorted by (order of the representative,
    smallest member); the representative is the smallest member.
    """

    parent: FiniteGroup
    label: str
    representative: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def conjugacy_classes(group: FiniteGroup) -> tuple[ConjugacyClass, ...]:
    assigned = [False] * group.order
    raw: list[tuple[int, tuple[int, ...]]] = []
    for start in range(group.order):
        if assigned[start]:
            continue
        members = {group.conjugate(h, start) for h in range(group.order)}
        for member in members:
            assigned[member] = True
        raw.append((start, tuple(sorted(members))))
    raw.sort(key=lambda item: (group.element_order(item[0]), item[0]))
    return tuple(
        ConjugacyClass(group, f"a{k}", representative, members)
        for k, (representative, members) in enumerate(raw)
    )


def centralizer(group: FiniteGroup, x: int) -> Subgroup:
    members = tuple(
        h for h in range(group.order) if group.table[h][x] == group.table[x][h]
    )
    return Subgroup(group, members)


def normalizer(group: FiniteGroup, subgroup: Subgroup) -> Subgroup:
    member_set = subgroup.member_set()
    members = tuple(
        h
        for h in range(group.order)
        if all(group.conjugate(h, x) in member_set for x in subgroup.elements)
    )
    return Subgroup(group, members)


def quotient_group(
    overgroup: Subgroup, kernel: Subgroup
) -> tuple[FiniteGroup, dict[int, int]]:
    """The quotient of ``overgroup`` by a normal subgroup ``kernel``.

    Returns the quotient as a new :class:`FiniteGroup` (cosets numbered by
    their smallest member, so the kernel itself is element 0) together with
    the projection map from overgroup elements to coset indices.  The caller
    must pass a genuinely normal kernel; violations raise
    :class:`ConsistencyError` because they indicate a logic error upstream.
    """
    parent = overgroup.parent
    if kernel.parent is not parent:
        raise InputError("kernel and overgroup must live in the same parent group")
    over_set = overgroup.member_set()
    kernel_set = kernel.member_set()
    if not kernel_set <= over_set:
        raise InputError("kernel is not contained in the overgroup")
    for h in overgroup.elements:
        for x in kernel.elements:
            if parent.conjugate(h, x) not in kernel_set:
                raise ConsistencyError(
                    f"kernel is not normal in the overgroup: element {h} moves it"
                )
    projection: dict[int, int] = {}
    cosets: list[tuple[int, ...]] = []
    for h in overgroup.elements:
        if h in projection:
            continue
        coset = tuple(sorted(parent.table[h][x] for x in kernel.elements))
        for member in coset:
            projection[member] = len(cosets)
        cosets.append(coset)
    reps = [coset[0] for coset in cosets]
    table = [
        [projection[parent.table[left][right]] for right in reps]
        for left in reps
    ]
    names = [parent.names[rep] for rep in reps]
    quotient = FiniteGroup(table, names=names)
    return quotient, projection


def subgroups_containing(group: FiniteGroup, subgroup: Subgroup) -> tuple[Subgroup, ...]:
    """All subgroups of ``group`` that contain ``subgroup``.

    Works upward by iterated closure: starting from the subgroup itself,
    adjoin one new element in every possible way until no new subgroups
    appear.  Every overgroup of the seed is generated by the seed plus
    finitely many elements, and any such chain of adjunctions passes through
    subgroups found here, so the sweep is exhaustive.  Results come back
    sorted by (order, element tuple) with ``id`` set to the position.
    """
    if subgroup.parent is not group:
        raise InputError("subgroup does not belong to the given group")
    seed = frozenset(subgroup.elements)
    found: set[frozenset[int]] = {seed}
    frontier: list[frozenset[int]] = [seed]
    while frontier:
        base = frontier.pop()
        for x in range(group.order):
            if x in base:
                continue
            bigger = _close_under_products(group, base | {x})
            if bigger not in found:
                found.add(bigger)
                frontier.append(bigger)
    ordered = sorted((tuple(sorted(members)) for members in found), key=lambda t: (len(t), t))
    return tuple(
        Subgroup(group, members, id=position) for position, members in enumerate(ordered)
    )


def is_core_free(group: FiniteGroup, subgroup: Subgroup) -> bool:
    """Whether the largest normal subgroup of ``group`` inside ``subgroup`` is trivial."""
    core = set(subgroup.elements)
    for h in range(group.order):
        core &= {group.conjugate(h, x) for x in subgroup.elements}
        if core == {0}:
            return True
    return core == {0}


def is_associative(group: FiniteGroup) -> bool:
    """Exhaustive associativity check; meant for tests on small groups."""
    table = group.table
    for a in range(group.order):
        for b in range(group.order):
            ab = table[a][b]
            row_a = table[a]
            for c in range(group.order):
                if table[ab][c] != row_a[table[b][c]]:
                    return False
    return True


def group_from_document(
    document: Mapping[str, object],
    order_bound: int = DEFAULT_ORDER_BOUND,
) -> tuple[FiniteGroup, Subgroup]:
    """Build a (group, subgroup) pair from a parsed JSON document.

    The document has the shape ``{"degree": d, "generators": [[...], ...],
    "k_generators": [[...], ...]}`` where each generator is a permutation of
    ``0..d-1`` in one-line notation.  ``k_generators`` may be absent or empty,
    giving the trivial subgroup.  Every subgroup generator must land in the
    group generated by ``generators``.
    """
    if not isinstance(document, Mapping):
        raise InputError("group document must be a JSON object")
    unknown = set(document) - {"degree", "generators", "k_generators"}
    if unknown:
        raise InputError(f"unknown group document keys: {sorted(unknown)}")
    degree = document.get("degree")
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise InputError(f"degree must be a positive integer, got {degree!r}")
    generators = document.get("generators")
    if not isinstance(generators, Sequence) or isinstance(generators, (str, bytes)):
        raise InputError("generators must be a list of permutations")
    gen_list = []
    for pos, gen in enumerate(generators):
        if not isinstance(gen, Sequence) or isinstance(gen, (str, bytes)):
            raise InputError(f"generators[{pos}] must be a list of integers")
        gen_list.append(list(gen))
    group = build_group(degree, gen_list, order_bound=order_bound)
    assert group.perms is not None
    perm_index = {perm: position for position, perm in enumerate(group.perms)}
    k_generators = document.get("k_generators", [])
    if not isinstance(k_generators, Sequence) or isinstance(k_generators, (str, bytes)):
        raise InputError("k_generators must be a list of permutations")
    k_indices = []
    for pos, gen in enumerate(k_generators):
        if not isinstance(gen, Sequence) or isinstance(gen, (str, bytes)):
            raise InputError(f"k_generators[{pos}] must be a list of integers")
        perm = tuple(gen)
        if sorted(perm) != list(range(degree)):
            raise InputError(f"k_generators[{pos}] is not a permutation of 0..{degree - 1}")
        if perm not in perm_index:
            raise InputError(f"k_generators[{pos}] is not an element of the generated group")
        k_indices.append(perm_index[perm])
    return group, subgroup_closure(group, k_indices)


def document_digest(document: Mapping[str, object]) -> str:
    """A short stable digest of a group document, used as provenance tag."""
    canonical = {
        "degree": document.get("degree"),
        "generators": [list(map(int, g)) for g in document.get("generators", [])],
        "k_generators": [list(map(int, g)) for g in document.get("k_generators", [])],
    }
    payload = json.dumps(canonical, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode("ascii")).hexdigest()[:12]
