"""Finite strict posets and PL-structures (a poset plus k linear extensions).

Elements are dense indices 0..n-1.  The partial order is stored transitively
closed so comparability checks are O(1) bitmask lookups.  All values are
immutable after construction and safe to share between threads.

Construction performs only shape checks; semantic validity (permutation
lins, closure properties, the extension condition) is the job of
:func:`validate_structure`, which reports every violation it finds instead
of raising.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import CycleError, EmptyStructureError


@dataclass(frozen=True)
class StrictPoset:
    """A strict partial order on 0..n-1, stored as transitively closed bitmask rows.

    ``up[a]`` has bit ``b`` set iff ``a`` is strictly below ``b``.
    """

    n: int
    up: tuple[int, ...]

    def __post_init__(self):
        if self.n <= 0:
            raise EmptyStructureError("poset needs at least one element")
        if len(self.up) != self.n:
            raise ValueError(f"expected {self.n} relation rows, got {len(self.up)}")

    def less(self, a: int, b: int) -> bool:
        """True iff ``a`` is strictly below ``b``."""
        return bool((self.up[a] >> b) & 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """All related pairs (a, b) with a strictly below b, in sorted order."""
        for a in range(self.n):
            row = self.up[a]
            while row:
                low = row & -row
                yield a, low.bit_length() - 1
                row ^= low

    def cover_pairs(self) -> list[tuple[int, int]]:
        """The transitive reduction: pairs (a, b) with nothing strictly between."""
        down = self.down_masks()
        return [(a, b) for a, b in self.pairs() if not (self.up[a] & down[b])]

    def down_masks(self) -> tuple[int, ...]:
        """down[b] has bit a set iff a is strictly below b (transpose of up)."""
        down = [0] * self.n
        for a, b in self.pairs():
            down[b] |= 1 << a
        return tuple(down)


@dataclass(frozen=True)
class LinearOrder:
    """A total order given by ranks: ``rank[e]`` is the position of element e.

    ``order`` is the inverse permutation (position -> element); it is derived
    defensively so that structures with defective ranks can still be built and
    then reported by :func:`validate_structure`.
    """

    rank: tuple[int, ...]
    order: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        inv = tuple(sorted(range(len(self.rank)), key=lambda e: (self.rank[e], e)))
        object.__setattr__(self, "order", inv)

    @property
    def n(self) -> int:
        return len(self.rank)

    def is_permutation(self) -> bool:
        return sorted(self.rank) == list(range(len(self.rank)))


@dataclass(frozen=True)
class PLStructure:
    """A finite strict poset together with k linear orders meant to extend it."""

    poset: StrictPoset
    lins: tuple[LinearOrder, ...]

    def __post_init__(self):
        if not self.lins:
            raise ValueError("a PL-structure needs at least one linear order")

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def k(self) -> int:
        return len(self.lins)


@dataclass(frozen=True)
class Violation:
    """One defect found by validate_structure.

    kind is one of: reflexive, asymmetry, transitivity, lin-shape,
    lin-not-permutation, extension.  ``data`` carries the offending indices;
    for extension failures it is (i, a, b) with i the 1-based order index.
    """

    kind: str
    message: str
    data: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]

    def extension_failures(self) -> list[tuple[int, int, int]]:
        return [v.data for v in self.violations if v.kind == "extension"]


def transitive_closure_strict(n: int, pairs: Iterable[tuple[int, int]]) -> StrictPoset:
    """Smallest transitive strict relation containing ``pairs``, as a StrictPoset.

    Raises CycleError (naming one offending cycle) if the closure would relate
    an element to itself, and IndexError on out-of-range generators.
    """
    if n <= 0:
        raise EmptyStructureError("poset needs at least one element")
    pair_list = []
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise IndexError(f"pair ({a}, {b}) out of range for n={n}")
        pair_list.append((a, b))

    up = [0] * n
    for a, b in pair_list:
        up[a] |= 1 << b
    # Warshall over bitmask rows.
    for b in range(n):
        row_b = up[b]
        bit_b = 1 << b
        for a in range(n):
            if up[a] & bit_b:
                up[a] |= row_b
    for a in range(n):
        if (up[a] >> a) & 1:
            raise CycleError(_find_cycle(n, pair_list, a))
    return StrictPoset(n, tuple(up))


def _find_cycle(n: int, pairs: list[tuple[int, int]], start: int) -> list[int]:
    # BFS over generator edges from start back to start.
    succ: dict[int, list[int]] = {}
    for a, b in pairs:
        succ.setdefault(a, []).append(b)
    parent = {start: None}
    queue = [start]
    while queue:
        a = queue.pop(0)
        for b in sorted(succ.get(a, ())):
            if b == start:
                path = []
                node = a
                while node is not None:
                    path.append(node)
                    node = parent[node]
                path.reverse()  # start ... a
                return path + [start]
            if b not in parent:
                parent[b] = a
                queue.append(b)
    # Unreachable for a genuine closure cycle; keep a degenerate answer.
    return [start, start]


def validate_structure(s: PLStructure) -> ValidationReport:
    """Check every structural invariant, returning the complete violation list."""
    out: list[Violation] = []
    n = s.n
    up = s.poset.up
    for a in range(n):
        if (up[a] >> a) & 1:
            out.append(Violation("reflexive", f"element {a} is below itself", (a,)))
    for a in range(n):
        row = up[a]
        for b in range(n):
            if (row >> b) & 1:
                if (up[b] >> a) & 1 and a < b:
                    out.append(Violation("asymmetry", f"both {a}<{b} and {b}<{a}", (a, b)))
                gap = up[b] & ~row
                while gap:
                    low = gap & -gap
                    c = low.bit_length() - 1
                    out.append(
                        Violation("transitivity", f"{a}<{b}<{c} but not {a}<{c}", (a, b, c))
                    )
                    gap ^= low
    for i, lin in enumerate(s.lins, start=1):
        if lin.n != n:
            out.append(Violation("lin-shape", f"lin {i} has {lin.n} entries, expected {n}", (i,)))
            continue
        if not lin.is_permutation():
            out.append(Violation("lin-not-permutation", f"lin {i} is not a permutation", (i,)))
            continue
        for a in range(n):
            row = up[a]
            for b in range(n):
                if (row >> b) & 1 and lin.rank[a] >= lin.rank[b]:
                    out.append(
                        Violation("extension", f"lin {i} does not extend the order at {a}<{b}", (i, a, b))
                    )
    return ValidationReport(not out, tuple(out))


def restrict_structure(s: PLStructure, subset: Sequence[int]) -> PLStructure:
    """Induced substructure on ``subset``, relabeled 0..m-1 in the given order.

    ``subset`` must be nonempty, strictly increasing and within range.
    """
    members = list(subset)
    if not members:
        raise EmptyStructureError("cannot restrict to the empty set")
    for e in members:
        if not (0 <= e < s.n):
            raise IndexError(f"element {e} out of range for n={s.n}")
    if any(members[i] >= members[i + 1] for i in range(len(members) - 1)):
        raise ValueError("subset must be strictly increasing")

    m = len(members)
    up = [0] * m
    for i, a in enumerate(members):
        for j, b in enumerate(members):
            if s.poset.less(a, b):
                up[i] |= 1 << j
    lins = []
    for lin in s.lins:
        by_old_rank = sorted(range(m), key=lambda i: lin.rank[members[i]])
        rank = [0] * m
        for pos, i in enumerate(by_old_rank):
            rank[i] = pos
        lins.append(LinearOrder(tuple(rank)))
    return PLStructure(StrictPoset(m, tuple(up)), tuple(lins))


def canonical_form(s: PLStructure) -> tuple[PLStructure, tuple[int, ...]]:
    """Relabel so the first linear order is the identity.

    Every PL-structure is rigid (a preserved total order forces the identity),
    so isomorphism is exactly equality of canonical forms.  Returns the
    canonical structure and the relabeling permutation old -> new.
    """
    perm = s.lins[0].rank  # new label of e is its first-order rank
    n = s.n
    up = [0] * n
    for a, b in s.poset.pairs():
        up[perm[a]] |= 1 << perm[b]
    lins = []
    for lin in s.lins:
        rank = [0] * n
        for e in range(n):
            rank[perm[e]] = lin.rank[e]
        lins.append(LinearOrder(tuple(rank)))
    return PLStructure(StrictPoset(n, tuple(up)), tuple(lins)), tuple(perm)


def structure_key(s: PLStructure) -> tuple:
    """Deterministic sort key; equal keys on canonical forms mean isomorphic."""
    return (s.n, s.k, s.poset.up, tuple(lin.rank for lin in s.lins))


def order_slice(s: PLStructure, i: int) -> PLStructure:
    """The single-order structure keeping only the i-th linear order (0-based)."""
    return PLStructure(s.poset, (s.lins[i],))


def chain(n: int, k: int = 1) -> PLStructure:
    """The n-chain 0 < 1 < ... < n-1 with k identical linear orders."""
    if n <= 0:
        raise EmptyStructureError("chain needs at least one element")
    up = tuple(((1 << n) - 1) ^ ((1 << (a + 1)) - 1) for a in range(n))
    identity = LinearOrder(tuple(range(n)))
    return PLStructure(StrictPoset(n, up), (identity,) * k)


def antichain(n: int, k: int = 1) -> PLStructure:
    """n pairwise-incomparable elements with k identity linear orders."""
    if n <= 0:
        raise EmptyStructureError("antichain needs at least one element")
    identity = LinearOrder(tuple(range(n)))
    return PLStructure(StrictPoset(n, (0,) * n), (identity,) * k)


def point(k: int = 1) -> PLStructure:
    """The one-element structure with k (trivial) linear orders."""
    return chain(1, k)


def build_structure(n: int, pairs: Iterable[tuple[int, int]], rank_rows: Sequence[Sequence[int]]) -> PLStructure:
    """Convenience constructor: close the generators and attach rank rows."""
    poset = transitive_closure_strict(n, pairs)
    return PLStructure(poset, tuple(LinearOrder(tuple(r)) for r in rank_rows))


def is_chain_structure(s: PLStructure) -> bool:
    """True iff every pair of elements is comparable."""
    for a in range(s.n):
        for b in range(a + 1, s.n):
            if not (s.poset.less(a, b) or s.poset.less(b, a)):
                return False
    return True
