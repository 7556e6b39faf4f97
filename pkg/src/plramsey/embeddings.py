"""Order-preserving embeddings and copy enumeration.

A copy of a pattern in a host is an injective map preserving every linear
order in both directions and the partial order either biconditionally
(STRONG) or one-directionally (WEAK).  Because the first linear order is
total and preserved, a copy is determined by its image set; copies are
encoded as the image list in pattern first-order rank order, which makes
them hashable dictionary keys for colorings.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import ArityMismatchError, ShapeMismatchError, SizeMismatchError
from .orders import PLStructure


class Semantics(enum.Enum):
    """How the partial order must transfer through an embedding."""

    STRONG = "strong"  # x P y  <=>  pi(x) P pi(y)
    WEAK = "weak"      # x P y  ==>  pi(x) P pi(y)


@dataclass(frozen=True)
class Embedding:
    """An injective order-preserving map, stored as its image list.

    ``image[j]`` is the host element that the pattern element with first-order
    rank j maps to.  Entries are pairwise distinct and strictly increasing in
    the host's first order.
    """

    image: tuple[int, ...]

    @property
    def pattern_size(self) -> int:
        return len(self.image)


def identity_embedding(s: PLStructure) -> Embedding:
    """The identity map of a structure into itself."""
    return Embedding(tuple(s.lins[0].order))


def _require_same_arity(pattern: PLStructure, host: PLStructure) -> None:
    if pattern.k != host.k:
        raise ArityMismatchError(
            f"pattern has {pattern.k} linear orders, host has {host.k}"
        )


def check_embedding(
    e: Embedding,
    pattern: PLStructure,
    host: PLStructure,
    mode: Semantics = Semantics.STRONG,
) -> bool:
    """Decide whether ``e`` is an order-preserving embedding of pattern into host."""
    _require_same_arity(pattern, host)
    m = pattern.n
    if e.pattern_size != m:
        raise SizeMismatchError(f"map has {e.pattern_size} entries, pattern has {m}")
    for h in e.image:
        if not (0 <= h < host.n):
            raise IndexError(f"image element {h} out of range for host n={host.n}")
    if len(set(e.image)) != m:
        return False

    strong = mode is Semantics.STRONG
    p_rank = [lin.rank for lin in pattern.lins]
    h_rank = [lin.rank for lin in host.lins]
    p_order = pattern.lins[0].order
    for j2 in range(m):
        x2, h2 = p_order[j2], e.image[j2]
        for j1 in range(j2):
            x1, h1 = p_order[j1], e.image[j1]
            for i in range(pattern.k):
                if (p_rank[i][x1] < p_rank[i][x2]) != (h_rank[i][h1] < h_rank[i][h2]):
                    return False
            if pattern.poset.less(x1, x2):
                if not host.poset.less(h1, h2):
                    return False
            elif strong and host.poset.less(h1, h2):
                return False
            if pattern.poset.less(x2, x1):
                if not host.poset.less(h2, h1):
                    return False
            elif strong and host.poset.less(h2, h1):
                return False
    return True


def enumerate_copies(
    pattern: PLStructure,
    host: PLStructure,
    mode: Semantics = Semantics.STRONG,
) -> list[Embedding]:
    """All copies of pattern in host, in lexicographic order of image lists.

    Backtracks over image positions in pattern first-order rank order;
    candidates at each position run in ascending host index, which makes the
    emission order lexicographic.  First-order preservation is enforced by
    requiring host first-order ranks to increase along positions; the other
    orders and the partial order are checked pairwise against the partial map.
    """
    _require_same_arity(pattern, host)
    m, n = pattern.n, host.n
    if m > n:
        return []

    p_order = pattern.lins[0].order
    p_rank = [lin.rank for lin in pattern.lins]
    h_rank = [lin.rank for lin in host.lins]
    h_rank1 = h_rank[0]
    h_up = host.poset.up
    strong = mode is Semantics.STRONG
    k = pattern.k

    # Pairwise requirements between positions j1 < j2: the sign of every
    # non-first order and whether the earlier pattern element lies below the
    # later one.  The reverse relation is impossible on both sides because
    # the first order extends the partial order.
    need = []
    for j2 in range(m):
        x2 = p_order[j2]
        row = []
        for j1 in range(j2):
            x1 = p_order[j1]
            signs = tuple(p_rank[i][x1] < p_rank[i][x2] for i in range(1, k))
            row.append((j1, signs, pattern.poset.less(x1, x2)))
        need.append(row)

    out: list[Embedding] = []
    image = [0] * m
    used = [False] * n

    def extend(j: int, min_rank1: int) -> None:
        if j == m:
            out.append(Embedding(tuple(image)))
            return
        reqs = need[j]
        for h in range(n):
            if used[h] or h_rank1[h] <= min_rank1:
                continue
            ok = True
            for j1, signs, below in reqs:
                g = image[j1]
                for i, sign in enumerate(signs, start=1):
                    if (h_rank[i][g] < h_rank[i][h]) != sign:
                        ok = False
                        break
                if not ok:
                    break
                host_below = bool((h_up[g] >> h) & 1)
                if below:
                    if not host_below:
                        ok = False
                        break
                elif strong and host_below:
                    ok = False
                    break
            if not ok:
                continue
            used[h] = True
            image[j] = h
            extend(j + 1, h_rank1[h])
            used[h] = False
        return

    extend(0, -1)
    return out


def copy_from_subset(
    subset: Iterable[int],
    pattern: PLStructure,
    host: PLStructure,
    mode: Semantics = Semantics.STRONG,
) -> Optional[Embedding]:
    """The unique candidate map on a host subset, if it is a copy.

    The subset is matched to the pattern along the two first orders; rigidity
    makes this the only possible embedding with that image set.
    """
    members = sorted(set(subset))
    if len(members) != pattern.n:
        raise SizeMismatchError(
            f"subset has {len(members)} elements, pattern has {pattern.n}"
        )
    members.sort(key=lambda h: host.lins[0].rank[h])
    e = Embedding(tuple(members))
    return e if check_embedding(e, pattern, host, mode) else None


def compose_embeddings(outer: Embedding, inner: Embedding, mid: PLStructure) -> Embedding:
    """Compose inner (A -> B) with outer (B -> C); ``mid`` is B.

    ``mid`` supplies the first-order ranks needed to look inner's image
    elements up inside outer's image list.
    """
    if outer.pattern_size != mid.n:
        raise ShapeMismatchError(
            f"outer expects a pattern of size {outer.pattern_size}, middle structure has {mid.n}"
        )
    for b in inner.image:
        if not (0 <= b < mid.n):
            raise ShapeMismatchError(f"inner image element {b} not in middle structure")
    rank1 = mid.lins[0].rank
    return Embedding(tuple(outer.image[rank1[b]] for b in inner.image))


def slice_embedding(e: Embedding, pattern: PLStructure, i: int) -> Embedding:
    """Re-index a copy of ``pattern`` so positions follow its i-th order.

    The result is the same map written as an embedding of the single-order
    slice (pattern restricted to order i), whose own first order is order i.
    """
    rank1 = pattern.lins[0].rank
    return Embedding(tuple(e.image[rank1[x]] for x in pattern.lins[i].order))


def unslice_embedding(e: Embedding, pattern: PLStructure, i: int) -> Embedding:
    """Inverse of :func:`slice_embedding`: back to first-order indexing."""
    rank_i = pattern.lins[i].rank
    return Embedding(tuple(e.image[rank_i[x]] for x in pattern.lins[0].order))


def copies_inside(
    outer: Embedding,
    outer_pattern: PLStructure,
    inner_pattern: PLStructure,
    mode: Semantics = Semantics.STRONG,
) -> list[Embedding]:
    """Copies of ``inner_pattern`` lying inside the image of ``outer``.

    Computed by composing ``outer`` with every copy of the inner pattern in
    the outer pattern; copies are identified with their maps, so this is the
    meaning of "copies inside a copy" in both semantics.
    """
    return [
        compose_embeddings(outer, t, outer_pattern)
        for t in enumerate_copies(inner_pattern, outer_pattern, mode)
    ]
