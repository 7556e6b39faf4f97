"""Independent brute-force oracles and instance generators for the tests.

Everything here deliberately avoids the library's search code paths: copy
checks are written straight from the definition over all ordered pairs, copy
enumeration scans raw subsets, and the verifier oracle enumerates every
coloring.  The test suites compare library results against these.
"""

from __future__ import annotations

import itertools
import random

from plramsey import (
    Embedding,
    PLStructure,
    enumerate_copies,
    order_slice,
    point,
    random_structure,
)


def naive_is_embedding(e: Embedding, pattern: PLStructure, host: PLStructure, strong: bool = True) -> bool:
    m = pattern.n
    if len(set(e.image)) != m:
        return False

    def img(x: int) -> int:
        return e.image[pattern.lins[0].rank[x]]

    for x in range(m):
        for y in range(m):
            if x == y:
                continue
            for i in range(pattern.k):
                p_before = pattern.lins[i].rank[x] < pattern.lins[i].rank[y]
                h_before = host.lins[i].rank[img(x)] < host.lins[i].rank[img(y)]
                if p_before != h_before:
                    return False
            p_less = pattern.poset.less(x, y)
            h_less = host.poset.less(img(x), img(y))
            if strong and p_less != h_less:
                return False
            if not strong and p_less and not h_less:
                return False
    return True


def brute_force_copies(pattern: PLStructure, host: PLStructure, strong: bool = True) -> list[Embedding]:
    out = []
    for subset in itertools.combinations(range(host.n), pattern.n):
        image = tuple(sorted(subset, key=lambda h: host.lins[0].rank[h]))
        e = Embedding(image)
        if naive_is_embedding(e, pattern, host, strong):
            out.append(e)
    out.sort(key=lambda e: e.image)
    return out


def naive_verify(pattern: PLStructure, target: PLStructure, host: PLStructure, r: int, strong: bool = True):
    """Exhaustively enumerate all colorings; lexicographically first bad one wins.

    Returns ("ramsey", None) or ("not-ramsey", {image: color}).  In strong
    mode the pattern copies inside a target copy are found by image-set
    filtering; in weak mode a copy carries its own partial order, so the
    copies inside it are the compositions with the copy map.
    """
    x_copies = brute_force_copies(pattern, host, strong)
    y_copies = brute_force_copies(target, host, strong)
    member_sets = []
    if strong:
        for ey in y_copies:
            inside = set(ey.image)
            member_sets.append(
                [i for i, ex in enumerate(x_copies) if set(ex.image) <= inside]
            )
    else:
        index = {ex.image: i for i, ex in enumerate(x_copies)}
        inner = brute_force_copies(pattern, target, strong)
        y_rank1 = target.lins[0].rank
        for ey in y_copies:
            members = []
            for t in inner:
                composed = tuple(ey.image[y_rank1[b]] for b in t.image)
                members.append(index[composed])
            member_sets.append(sorted(members))
    m = len(x_copies)
    for coloring in itertools.product(range(r), repeat=m):
        if not any(len({coloring[p] for p in s}) <= 1 for s in member_sets):
            return "not-ramsey", {
                x_copies[p].image: coloring[p] for p in range(m)
            }
    return "ramsey", None


def random_join_instance(rng: random.Random, max_factor: int = 4, max_k: int = 3, max_pattern: int = 3):
    """A join instance whose pattern embeds into every factor slice.

    Returns (k, factors, pattern, per-coordinate copy lists).  Falls back to a
    one-point pattern if a random pattern keeps missing some factor.
    """
    for attempt in range(60):
        k = rng.randint(1, max_k)
        factors = [random_structure(rng, rng.randint(1, max_factor), 1) for _ in range(k)]
        if attempt < 50:
            pattern = random_structure(rng, rng.randint(1, max_pattern), k)
        else:
            pattern = point(k)
        copy_lists = [
            enumerate_copies(order_slice(pattern, i), factors[i]) for i in range(k)
        ]
        if all(copy_lists):
            return k, factors, pattern, copy_lists
    raise AssertionError("instance generator failed to produce an embeddable pattern")


def random_nested_instance(rng: random.Random, max_inner: int = 2, max_outer: int = 3, max_k: int = 3, max_factor: int = 4):
    """A (pattern, target, factors) triple where pattern embeds in target and
    every target slice embeds in its factor.  Used by the composition suites."""
    for attempt in range(200):
        k = rng.randint(1, max_k)
        target = random_structure(rng, rng.randint(1, max_outer), k)
        if attempt < 150:
            inner_n = rng.randint(1, min(max_inner, target.n))
            pattern = random_structure(rng, inner_n, k)
        else:
            pattern = point(k)
        if not enumerate_copies(pattern, target):
            continue
        factors = [random_structure(rng, rng.randint(target.n, max_factor), 1) for _ in range(k)]
        slice_lists = [
            enumerate_copies(order_slice(target, i), factors[i]) for i in range(k)
        ]
        if all(slice_lists):
            return pattern, target, factors, slice_lists
    raise AssertionError("instance generator failed to produce a nested instance")
