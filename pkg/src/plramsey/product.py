"""Coordinatewise Ramsey planning and monochromatic product extraction.

Given per-coordinate (pattern, target) pairs of single-order structures and a
base color count r, planning chooses witnesses from the last coordinate back
to the first: the color count demanded of coordinate i is r raised to the
number of copy tuples over the later coordinates, because extraction will
recolor coordinate i by the whole tuple-valued restriction of the coloring.

Extraction then walks coordinates first to last: it encodes each coordinate's
residual color function as a mixed-radix integer over the lexicographically
ordered residual copy tuples, finds the first target copy (in lexicographic
image order) on which that function is constant, fixes it, and recurses on
the residual coloring.  The returned per-coordinate copies span a product of
copy sets on which the original coloring is literally constant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .errors import ArityError, NotMonochromaticError, OracleFailure, PlanOverflowError
from .orders import PLStructure, chain, is_chain_structure
from .embeddings import Embedding, Semantics, compose_embeddings, enumerate_copies

# Answers carry how much trust the witness deserves: "verified" means the
# oracle ran an exhaustive check, "asserted" means it relied on an argument.
VERIFIED = "verified"
ASSERTED = "asserted"

Oracle = Callable[[PLStructure, PLStructure, int], tuple[PLStructure, str]]


@dataclass(frozen=True)
class PlanCoordinate:
    pattern: PLStructure
    target: PLStructure
    witness: PLStructure
    colors_required: int
    copy_count: int  # copies of pattern in witness
    tag: str


@dataclass(frozen=True)
class ProductPlan:
    base_colors: int
    coordinates: tuple[PlanCoordinate, ...]
    mode: Semantics = Semantics.STRONG

    @property
    def k(self) -> int:
        return len(self.coordinates)

    def copy_lists(self) -> list[list[Embedding]]:
        return [
            enumerate_copies(c.pattern, c.witness, self.mode) for c in self.coordinates
        ]


@dataclass
class ProductColoring:
    """A total coloring of tuples of per-coordinate copies.

    Keys are k-tuples of embeddings, one copy of each coordinate's pattern in
    that coordinate's witness; values are colors 0..r-1.
    """

    r: int
    colors: dict[tuple[Embedding, ...], int]


@dataclass(frozen=True)
class ProductExtraction:
    copies: tuple[Embedding, ...]  # copy of target_i in witness_i, per coordinate
    color: int


class ChainOracle:
    """Pigeonhole witnesses for single-point patterns in chain targets.

    For a one-element pattern and an m-chain target with r colors, the chain
    on r*(m-1)+1 points forces a color class of size m, which is the
    monochromatic chain.  The formula is only sound for one-element patterns,
    so anything else is refused.
    """

    def __call__(self, pattern: PLStructure, target: PLStructure, colors: int) -> tuple[PLStructure, str]:
        if pattern.k != 1 or target.k != 1:
            raise OracleFailure("chain strategy serves single-order structures only")
        if pattern.n != 1:
            raise OracleFailure(
                "chain strategy needs a one-element pattern; use a search oracle instead"
            )
        if not is_chain_structure(target):
            raise OracleFailure("chain strategy needs a chain target")
        return chain(colors * (target.n - 1) + 1), ASSERTED


def _bounded_power(r: int, exponent: int, bound: int) -> int:
    if r <= 1:
        return 1 if r == 1 else 0
    if exponent >= bound.bit_length():
        raise PlanOverflowError(
            f"required color count {r}^{exponent} exceeds bound {bound}"
        )
    value = r ** exponent
    if value > bound:
        raise PlanOverflowError(f"required color count {value} exceeds bound {bound}")
    return value


def plan_product_witnesses(
    pairs: Sequence[tuple[PLStructure, PLStructure]],
    r: int,
    oracle: Oracle,
    mode: Semantics = Semantics.STRONG,
    max_colors: int = 2**63 - 1,
) -> ProductPlan:
    """Choose a witness per coordinate, last to first, with color blow-up.

    Walking backwards means the copy counts of all later witnesses are known
    when a coordinate's required color count is computed.
    """
    if not pairs:
        raise ArityError("need at least one coordinate")
    if r < 1:
        raise ValueError("color count must be at least 1")
    for idx, (pattern, target) in enumerate(pairs):
        if pattern.k != 1 or target.k != 1:
            raise ArityError(f"coordinate {idx} must use single-order structures")

    coords: list[PlanCoordinate] = [None] * len(pairs)  # type: ignore[list-item]
    suffix = 1  # product of copy counts over the coordinates after i
    for i in range(len(pairs) - 1, -1, -1):
        pattern, target = pairs[i]
        needed = _bounded_power(r, suffix, max_colors)
        witness, tag = oracle(pattern, target, needed)
        if witness.k != 1:
            raise OracleFailure(f"oracle returned a {witness.k}-order witness for coordinate {i}")
        count = len(enumerate_copies(pattern, witness, mode))
        coords[i] = PlanCoordinate(pattern, target, witness, needed, count, tag)
        suffix *= count
    return ProductPlan(r, tuple(coords), mode)


def _check_total(plan: ProductPlan, chi: ProductColoring, copy_lists: list[list[Embedding]]) -> None:
    domain = set(itertools.product(*copy_lists))
    keys = set(chi.colors)
    if keys != domain:
        missing = len(domain - keys)
        extra = len(keys - domain)
        raise ValueError(
            f"coloring is not total over the plan domain ({missing} missing, {extra} extra)"
        )
    for value in chi.colors.values():
        if not (0 <= value < chi.r):
            raise ValueError(f"color {value} out of range 0..{chi.r - 1}")


def _extract(
    coords: Sequence[PlanCoordinate],
    copy_lists: Sequence[list[Embedding]],
    chi: Mapping[tuple[Embedding, ...], int],
    r: int,
    mode: Semantics,
) -> tuple[list[Embedding], int]:
    if not coords:
        return [], chi[()]

    head = coords[0]
    head_copies = copy_lists[0]
    residual = list(itertools.product(*copy_lists[1:]))

    # Recolor the head coordinate by the whole residual restriction, encoded
    # as a mixed-radix integer (digits in residual enumeration order).
    def blown_up(x: Embedding) -> int:
        value = 0
        for rest in residual:
            value = value * r + chi[(x,) + rest]
        return value

    recolored = {x: blown_up(x) for x in head_copies}

    inner = enumerate_copies(head.pattern, head.target, mode)
    for y_copy in enumerate_copies(head.target, head.witness, mode):
        inside = [compose_embeddings(y_copy, t, head.target) for t in inner]
        if not inside:
            # No pattern copies inside a target copy: every tuple statement
            # about this coordinate is vacuous, any residual choice works.
            tail = {rest: 0 for rest in residual}
            rest_copies, color = _extract(coords[1:], copy_lists[1:], tail, r, mode)
            return [y_copy] + rest_copies, color
        first = inside[0]
        if all(recolored[x] == recolored[first] for x in inside):
            tail = {rest: chi[(first,) + rest] for rest in residual}
            rest_copies, color = _extract(coords[1:], copy_lists[1:], tail, r, mode)
            return [y_copy] + rest_copies, color

    raise NotMonochromaticError(
        f"no copy of the coordinate target is monochromatic under the blown-up "
        f"coloring; the witness on {head.witness.n} elements is not Ramsey for "
        f"{head.colors_required} colors"
    )


def extract_product_monochromatic(plan: ProductPlan, chi: ProductColoring) -> ProductExtraction:
    """Extract per-coordinate target copies whose copy-tuple product is monochromatic.

    Deterministic: every coordinate scan takes the first monochromatic target
    copy in lexicographic image order.
    """
    copy_lists = plan.copy_lists()
    _check_total(plan, chi, copy_lists)
    copies, color = _extract(plan.coordinates, copy_lists, chi.colors, plan.base_colors, plan.mode)
    return ProductExtraction(tuple(copies), color)
