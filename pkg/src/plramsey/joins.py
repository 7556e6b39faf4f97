"""The join of k single-order structures and its canonical copies.

The join of factors Z_1..Z_k lives on the cartesian product of their ground
sets.  One tuple sits below another iff it is strictly below in every
coordinate, and the i-th linear order compares tuples lexicographically along
the cyclic coordinate scan i, i+1, ..., i+k-1.  Each of those total orders
extends the product order, so the join is again a PL-structure and every
other module applies to it unchanged.

A copy of a k-order pattern in the join is *canonical* when its coordinate
projections are themselves copies of the pattern's order slices into the
factors.  Assembling from component copies and decomposing back are mutually
inverse, which is the bijection the extraction pipeline pulls colorings
through.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ArityError, ArityMismatchError, InvalidComponentError, SizeMismatchError
from .orders import LinearOrder, PLStructure, StrictPoset, order_slice
from .embeddings import Embedding, Semantics, check_embedding


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class JoinedStructure:
    """A join: the factor list plus the materialized product structure.

    Product elements are flat row-major indices: the tuple (z_1, ..., z_k)
    maps to sum(z_i * prod(n_j for j > i)).
    """

    factors: tuple[PLStructure, ...]
    product: PLStructure
    sizes: tuple[int, ...]
    strides: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.factors)

    @property
    def n(self) -> int:
        return self.product.n

    def flat_index(self, coords: Sequence[int]) -> int:
        return sum(c * s for c, s in zip(coords, self.strides))

    def coordinates(self, flat: int) -> tuple[int, ...]:
        if not (0 <= flat < self.n):
            raise IndexError(f"flat index {flat} out of range for n={self.n}")
        out = []
        for s in self.strides:
            out.append(flat // s)
            flat %= s
        return tuple(out)


@dataclass(frozen=True)
class CanonicalCopy:
    """A copy of a pattern in a join together with its coordinate components.

    ``components[i]`` is the projection to factor i, written as an embedding
    of the pattern's i-th order slice (so its positions follow order i).  For
    every pattern element, the assembled image is the flat index of the tuple
    of component images of that same element.
    """

    components: tuple[Embedding, ...]
    assembled: Embedding


def join(factors: Sequence[PLStructure]) -> JoinedStructure:
    """Join k single-order structures into one k-order product structure."""
    factors = tuple(factors)
    if not factors:
        raise ArityError("join needs at least one factor")
    for idx, f in enumerate(factors):
        if f.k != 1:
            raise ArityError(f"factor {idx} has {f.k} linear orders, joins need exactly 1")

    k = len(factors)
    sizes = tuple(f.n for f in factors)
    strides = []
    acc = 1
    for nj in reversed(sizes):
        strides.append(acc)
        acc *= nj
    strides = tuple(reversed(strides))
    n = acc

    coords = list(itertools.product(*(range(nj) for nj in sizes)))  # row-major == flat order
    posets = [f.poset for f in factors]
    up = [0] * n
    for a in range(n):
        ca = coords[a]
        for b in range(n):
            cb = coords[b]
            if all(posets[i].less(ca[i], cb[i]) for i in range(k)):
                up[a] |= 1 << b

    ranks = [f.lins[0].rank for f in factors]
    lins = []
    for o in range(k):
        scan = [(o + j) % k for j in range(k)]
        order = sorted(range(n), key=lambda a: tuple(ranks[c][coords[a][c]] for c in scan))
        rank = [0] * n
        for pos, a in enumerate(order):
            rank[a] = pos
        lins.append(LinearOrder(tuple(rank)))

    product = PLStructure(StrictPoset(n, tuple(up)), tuple(lins))
    return JoinedStructure(factors, product, sizes, strides)


def shifted_lex_compare(js: JoinedStructure, i: int, a: int, b: int) -> Ordering:
    """Compare two flat product elements in the i-th shifted lexicographic order.

    ``i`` is 0-based.  The comparison is decided by the first coordinate that
    differs in the cyclic scan i, i+1, ..., i+k-1.
    """
    if not (0 <= i < js.k):
        raise IndexError(f"order index {i} out of range for k={js.k}")
    ca, cb = js.coordinates(a), js.coordinates(b)
    if ca == cb:
        return Ordering.EQUAL
    for j in range(js.k):
        c = (i + j) % js.k
        if ca[c] != cb[c]:
            rank = js.factors[c].lins[0].rank
            return Ordering.LESS if rank[ca[c]] < rank[cb[c]] else Ordering.GREATER
    return Ordering.EQUAL


def _assemble_image(js: JoinedStructure, pattern: PLStructure, components: Sequence[Embedding]) -> Embedding:
    # Flat image in pattern first-order indexing; callers validate components.
    image = []
    for x in pattern.lins[0].order:
        coords = tuple(components[i].image[pattern.lins[i].rank[x]] for i in range(js.k))
        image.append(js.flat_index(coords))
    return Embedding(tuple(image))


def assemble_canonical_copy(
    js: JoinedStructure,
    pattern: PLStructure,
    components: Sequence[Embedding],
    mode: Semantics = Semantics.STRONG,
) -> CanonicalCopy:
    """Assemble component copies into a copy of the pattern in the product.

    Component i must embed the pattern's i-th order slice into factor i; the
    assembled coordinate-tuple map is then automatically a copy of the whole
    pattern in the join.
    """
    components = tuple(components)
    if pattern.k != js.k:
        raise ArityMismatchError(f"pattern has {pattern.k} orders, join has {js.k}")
    if len(components) != js.k:
        raise ArityMismatchError(f"expected {js.k} components, got {len(components)}")
    for i, comp in enumerate(components):
        if comp.pattern_size != pattern.n:
            raise SizeMismatchError(
                f"component {i} has {comp.pattern_size} entries, pattern has {pattern.n}"
            )
        if not check_embedding(comp, order_slice(pattern, i), js.factors[i], mode):
            raise InvalidComponentError(i)
    assembled = _assemble_image(js, pattern, components)
    assert check_embedding(assembled, pattern, js.product, mode)
    return CanonicalCopy(components, assembled)


def decompose_canonical_copy(
    js: JoinedStructure,
    pattern: PLStructure,
    e: Embedding,
    mode: Semantics = Semantics.STRONG,
) -> Optional[tuple[Embedding, ...]]:
    """Recover component copies from a copy into the product, if canonical.

    Projects the image to each coordinate and checks the projection embeds the
    matching order slice into its factor.  Returns None when any projection
    fails, which is exactly the non-canonical case.
    """
    if pattern.k != js.k:
        raise ArityMismatchError(f"pattern has {pattern.k} orders, join has {js.k}")
    rank1 = pattern.lins[0].rank
    coords = [js.coordinates(flat) for flat in e.image]
    components = []
    for i in range(js.k):
        image_i = tuple(coords[rank1[x]][i] for x in pattern.lins[i].order)
        comp = Embedding(image_i)
        if not check_embedding(comp, order_slice(pattern, i), js.factors[i], mode):
            return None
        components.append(comp)
    return tuple(components)
