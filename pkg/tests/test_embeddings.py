import itertools
import random

import pytest

from plramsey import (
    ArityMismatchError,
    Embedding,
    Semantics,
    ShapeMismatchError,
    SizeMismatchError,
    antichain,
    chain,
    check_embedding,
    compose_embeddings,
    copy_from_subset,
    enumerate_copies,
    identity_embedding,
    point,
)
from plramsey.generate import random_structure

from helpers import brute_force_copies, naive_is_embedding


def test_point_embeds_anywhere():
    assert check_embedding(Embedding((0,)), point(), chain(2))
    assert check_embedding(Embedding((1,)), point(), chain(2))


def test_antichain_into_chain_strong_vs_weak():
    e = Embedding((0, 1))
    assert not check_embedding(e, antichain(2), chain(2), Semantics.STRONG)
    assert check_embedding(e, antichain(2), chain(2), Semantics.WEAK)


def test_identity_map_checks_in_both_modes():
    rng = random.Random(23)
    for _ in range(20):
        s = random_structure(rng, rng.randint(1, 5), rng.randint(1, 3))
        ident = identity_embedding(s)
        assert check_embedding(ident, s, s, Semantics.STRONG)
        assert check_embedding(ident, s, s, Semantics.WEAK)


def test_check_embedding_arity_mismatch():
    with pytest.raises(ArityMismatchError):
        check_embedding(Embedding((0,)), point(1), chain(2, 2))


def test_check_embedding_size_and_range():
    with pytest.raises(SizeMismatchError):
        check_embedding(Embedding((0,)), chain(2), chain(3))
    with pytest.raises(IndexError):
        check_embedding(Embedding((0, 9)), chain(2), chain(3))


def test_enumerate_point_copies():
    assert [e.image for e in enumerate_copies(point(), chain(2))] == [(0,), (1,)]


def test_enumerate_chain2_in_chain3():
    got = [e.image for e in enumerate_copies(chain(2), chain(3))]
    assert got == [(0, 1), (0, 2), (1, 2)]


def test_enumerate_chain_in_antichain_is_empty():
    assert enumerate_copies(chain(2), antichain(2)) == []


def test_enumerate_weak_antichain_in_chain():
    got = [e.image for e in enumerate_copies(antichain(2), chain(2), Semantics.WEAK)]
    assert got == [(0, 1)]


def test_enumerate_matches_brute_force():
    rng = random.Random(29)
    for _ in range(60):
        k = rng.randint(1, 3)
        host = random_structure(rng, rng.randint(1, 5), k)
        pattern = random_structure(rng, rng.randint(1, 3), k)
        for strong, mode in ((True, Semantics.STRONG), (False, Semantics.WEAK)):
            expected = brute_force_copies(pattern, host, strong)
            got = enumerate_copies(pattern, host, mode)
            assert got == expected


def test_copy_from_subset_examples():
    assert copy_from_subset({0, 1}, chain(2), chain(3)).image == (0, 1)
    assert copy_from_subset({0, 1}, chain(2), antichain(2)) is None
    with pytest.raises(SizeMismatchError):
        copy_from_subset({0}, chain(2), chain(3))


def test_copy_from_subset_inverts_enumeration():
    rng = random.Random(31)
    for _ in range(40):
        k = rng.randint(1, 3)
        host = random_structure(rng, rng.randint(1, 5), k)
        pattern = random_structure(rng, rng.randint(1, 3), k)
        for e in enumerate_copies(pattern, host):
            assert copy_from_subset(set(e.image), pattern, host) == e


def test_distinct_copies_have_distinct_image_sets():
    rng = random.Random(37)
    for _ in range(30):
        k = rng.randint(1, 3)
        host = random_structure(rng, rng.randint(1, 5), k)
        pattern = random_structure(rng, rng.randint(1, 3), k)
        found = enumerate_copies(pattern, host)
        assert len({frozenset(e.image) for e in found}) == len(found)


def test_compose_with_identity():
    e = Embedding((0, 2))
    assert compose_embeddings(identity_embedding(chain(3)), e, chain(3)) == e
    assert compose_embeddings(e, identity_embedding(chain(2)), chain(2)) == e


def test_compose_point_through_chain():
    inner = Embedding((1,))   # point -> 2-chain
    outer = Embedding((0, 2))  # 2-chain -> 3-chain
    assert compose_embeddings(outer, inner, chain(2)) == Embedding((2,))


def test_compose_shape_mismatch():
    with pytest.raises(ShapeMismatchError):
        compose_embeddings(Embedding((0, 1)), Embedding((2,)), chain(2))
    with pytest.raises(ShapeMismatchError):
        compose_embeddings(Embedding((0, 1)), Embedding((0,)), chain(3))


def test_compose_associativity_and_closure():
    rng = random.Random(41)
    checked = 0
    while checked < 25:
        k = rng.randint(1, 2)
        d = random_structure(rng, rng.randint(3, 5), k)
        c = random_structure(rng, rng.randint(2, 3), k)
        b = random_structure(rng, rng.randint(1, c.n), k)
        a = random_structure(rng, rng.randint(1, b.n), k)
        cds = enumerate_copies(c, d)
        bcs = enumerate_copies(b, c)
        abs_ = enumerate_copies(a, b)
        if not (cds and bcs and abs_):
            continue
        f = rng.choice(cds)
        g = rng.choice(bcs)
        h = rng.choice(abs_)
        left = compose_embeddings(compose_embeddings(f, g, c), h, b)
        right = compose_embeddings(f, compose_embeddings(g, h, b), c)
        assert left == right
        assert check_embedding(left, a, d)
        checked += 1


def test_rigidity_identity_is_only_self_copy():
    rng = random.Random(43)
    for _ in range(100):
        s = random_structure(rng, rng.randint(1, 6), rng.randint(1, 3))
        assert enumerate_copies(s, s) == [identity_embedding(s)]


def test_strong_copies_are_weak_copies():
    rng = random.Random(47)
    for _ in range(40):
        k = rng.randint(1, 3)
        host = random_structure(rng, rng.randint(1, 5), k)
        pattern = random_structure(rng, rng.randint(1, 3), k)
        strong = set(enumerate_copies(pattern, host, Semantics.STRONG))
        weak = set(enumerate_copies(pattern, host, Semantics.WEAK))
        assert strong <= weak


def test_enumeration_agrees_with_checker_over_all_subsets():
    rng = random.Random(53)
    host = random_structure(rng, 5, 2)
    pattern = random_structure(rng, 2, 2)
    listed = {e.image for e in enumerate_copies(pattern, host)}
    for subset in itertools.combinations(range(host.n), pattern.n):
        image = tuple(sorted(subset, key=lambda h: host.lins[0].rank[h]))
        e = Embedding(image)
        assert (e.image in listed) == check_embedding(e, pattern, host)
        assert check_embedding(e, pattern, host) == naive_is_embedding(e, pattern, host)
