"""Random and exhaustive generation of PL-structures.

Random generation is seeded-deterministic and used by the test suites;
exhaustive generation backs the "all" witness-search family.  Exhaustive
enumeration only produces relations whose pairs go from lower to higher
index (every finite poset has such a labeling), then dedups by canonical
form, so each isomorphism class appears exactly once.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .orders import (
    LinearOrder,
    PLStructure,
    StrictPoset,
    canonical_form,
    structure_key,
)


def random_poset(rng: random.Random, n: int, density: float = 0.4) -> StrictPoset:
    """A random strict poset: random DAG edges along a random permutation, closed."""
    perm = list(range(n))
    rng.shuffle(perm)
    up = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                up[perm[i]] |= 1 << perm[j]
    # Warshall closure; acyclic by construction.
    for b in range(n):
        bit = 1 << b
        for a in range(n):
            if up[a] & bit:
                up[a] |= up[b]
    return StrictPoset(n, tuple(up))


def random_linear_extension(rng: random.Random, poset: StrictPoset) -> LinearOrder:
    """A uniformly-chosen-at-each-step topological order of the poset."""
    n = poset.n
    down = poset.down_masks()
    placed = 0
    rank = [0] * n
    for pos in range(n):
        ready = [e for e in range(n) if not ((placed >> e) & 1) and (down[e] & ~placed) == 0]
        e = rng.choice(ready)
        rank[e] = pos
        placed |= 1 << e
    return LinearOrder(tuple(rank))


def random_structure(rng: random.Random, n: int, k: int, density: float = 0.4) -> PLStructure:
    """A random valid PL-structure with k linear extensions."""
    poset = random_poset(rng, n, density)
    lins = tuple(random_linear_extension(rng, poset) for _ in range(k))
    return PLStructure(poset, lins)


def linear_extensions(poset: StrictPoset) -> Iterator[LinearOrder]:
    """All linear extensions, in lexicographic order of their element sequences."""
    n = poset.n
    down = poset.down_masks()
    rank = [0] * n

    def extend(pos: int, placed: int) -> Iterator[LinearOrder]:
        if pos == n:
            yield LinearOrder(tuple(rank))
            return
        for e in range(n):
            if not ((placed >> e) & 1) and (down[e] & ~placed) == 0:
                rank[e] = pos
                yield from extend(pos + 1, placed | (1 << e))

    yield from extend(0, 0)


def enumerate_posets(n: int) -> Iterator[StrictPoset]:
    """All strict posets on 0..n-1 whose relations go low index to high index.

    Every isomorphism class has at least one such labeling.  Enumerated by
    the subset of upper-triangle pairs, transitivity checked directly.
    """
    cells = [(a, b) for a in range(n) for b in range(a + 1, n)]
    for picks in itertools.product((0, 1), repeat=len(cells)):
        up = [0] * n
        for chosen, (a, b) in zip(picks, cells):
            if chosen:
                up[a] |= 1 << b
        ok = True
        for a in range(n):
            row = up[a]
            probe = row
            while probe:
                low = probe & -probe
                b = low.bit_length() - 1
                if up[b] & ~row:
                    ok = False
                    break
                probe ^= low
            if not ok:
                break
        if ok:
            yield StrictPoset(n, tuple(up))


def enumerate_structures(n: int, k: int) -> list[PLStructure]:
    """All PL-structures with n elements and k extensions, one per isomorphism class.

    Results are in canonical form and sorted by their structure key, so the
    enumeration order is deterministic.
    """
    seen = set()
    out = []
    for poset in enumerate_posets(n):
        extensions = list(linear_extensions(poset))
        for lins in itertools.product(extensions, repeat=k):
            canon, _ = canonical_form(PLStructure(poset, lins))
            key = structure_key(canon)
            if key not in seen:
                seen.add(key)
                out.append(canon)
    out.sort(key=structure_key)
    return out
