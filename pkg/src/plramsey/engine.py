"""Witness verification and search, and the end-to-end extraction pipeline.

verify_witness decides whether a host forces, for every r-coloring of the
pattern copies it contains, some target copy whose inner pattern copies are
all one color.  It searches for a *bad* coloring (one avoiding every such
target copy) by backtracking with unit propagation, which detects the
forced case far earlier than enumerating all colorings.

synthesize_construction slices a k-order pattern and target into their
single-order views, plans per-coordinate witnesses, and joins them into one
k-order host.  extract_monochromatic_copy replays the construction: restrict
a coloring of the pattern copies in the host to the canonical ones, pull it
back through the component bijection, run the product extraction, and
assemble the resulting per-coordinate target copies into one target copy in
the host on which the coloring is constant.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ArityMismatchError, OracleFailure
from .orders import PLStructure, chain, order_slice
from .embeddings import (
    Embedding,
    Semantics,
    compose_embeddings,
    enumerate_copies,
)
from .joins import JoinedStructure, assemble_canonical_copy, _assemble_image, join
from .generate import enumerate_structures
from .product import (
    VERIFIED,
    Oracle,
    ProductColoring,
    ProductPlan,
    extract_product_monochromatic,
    plan_product_witnesses,
)


@dataclass
class CopyColoring:
    """A total coloring of the copies of one pattern in one host.

    Keys are copy image lists (tuples of host indices in pattern first-order
    rank order); values are colors 0..r-1.
    """

    r: int
    colors: dict[tuple[int, ...], int]

    @classmethod
    def constant(cls, domain: Sequence[Embedding], color: int, r: int) -> "CopyColoring":
        return cls(r, {e.image: color for e in domain})

    def check_total(self, domain: Sequence[Embedding]) -> None:
        expected = {e.image for e in domain}
        keys = set(self.colors)
        if keys != expected:
            raise ValueError(
                f"coloring is not total: {len(expected - keys)} copies missing, "
                f"{len(keys - expected)} unknown"
            )
        for value in self.colors.values():
            if not (0 <= value < self.r):
                raise ValueError(f"color {value} out of range 0..{self.r - 1}")


class VerifyStatus(enum.Enum):
    RAMSEY = "ramsey"
    NOT_RAMSEY = "not-ramsey"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class VerifyResult:
    status: VerifyStatus
    counterexample: Optional[CopyColoring]
    nodes: int
    copy_count: int


class _Budget(Exception):
    pass


def verify_witness(
    pattern: PLStructure,
    target: PLStructure,
    host: PLStructure,
    r: int,
    mode: Semantics = Semantics.STRONG,
    budget: int = 10**8,
) -> VerifyResult:
    """Decide the partition property of ``host`` for (pattern, target, r).

    RAMSEY means no r-coloring of the pattern copies in the host avoids a
    monochromatic target copy.  NOT_RAMSEY carries the lexicographically
    first bad coloring (copies ordered lexicographically, colors ascending).
    UNKNOWN means the node budget ran out.
    """
    if pattern.k != target.k or pattern.k != host.k:
        raise ArityMismatchError("pattern, target and host must share the same arity")
    if r < 1:
        raise ValueError("color count must be at least 1")

    x_copies = enumerate_copies(pattern, host, mode)
    position = {e.image: idx for idx, e in enumerate(x_copies)}
    inner = enumerate_copies(pattern, target, mode)
    constraints: list[tuple[int, ...]] = []
    for y_copy in enumerate_copies(target, host, mode):
        members = sorted(
            position[compose_embeddings(y_copy, t, target).image] for t in inner
        )
        if len(members) <= 1:
            # Vacuous or singleton copy sets are monochromatic in every
            # coloring, so no bad coloring can exist.
            return VerifyResult(VerifyStatus.RAMSEY, None, 0, len(x_copies))
        constraints.append(tuple(members))

    m = len(x_copies)
    full = (1 << r) - 1
    domains = [full] * m
    colors = [-1] * m
    watch: list[list[int]] = [[] for _ in range(m)]
    for ci, members in enumerate(constraints):
        for p in members:
            watch[p].append(ci)
    assigned = [0] * len(constraints)
    uniform = [True] * len(constraints)
    ucolor = [-1] * len(constraints)
    nodes = 0

    def propagate(ci: int, trail: list[tuple[int, int]]) -> bool:
        # All but one member share ucolor: the open one must avoid it.
        members = constraints[ci]
        open_p = -1
        for p in members:
            if colors[p] < 0:
                open_p = p
                break
        bit = 1 << ucolor[ci]
        if domains[open_p] & bit:
            trail.append((open_p, domains[open_p]))
            domains[open_p] &= ~bit
            if domains[open_p] == 0:
                return False
        return True

    def assign(p: int) -> Optional[list[int]]:
        nonlocal nodes
        if p == m:
            return colors.copy()
        base = domains[p]
        choice = base
        while choice:
            low = choice & -choice
            c = low.bit_length() - 1
            choice ^= low
            nodes += 1
            if nodes > budget:
                raise _Budget
            colors[p] = c
            trail: list[tuple[int, int]] = []
            touched: list[int] = []
            ok = True
            for ci in watch[p]:
                touched.append(ci)
                assigned[ci] += 1
                if assigned[ci] == 1:
                    ucolor[ci] = c
                elif uniform[ci] and ucolor[ci] != c:
                    uniform[ci] = False
                    trail.append((-1 - ci, 0))  # marker: uniform flipped
                if uniform[ci]:
                    if assigned[ci] == len(constraints[ci]):
                        ok = False  # fully assigned and monochromatic
                        break
                    if assigned[ci] == len(constraints[ci]) - 1 and not propagate(ci, trail):
                        ok = False
                        break
            if ok:
                result = assign(p + 1)
                if result is not None:
                    return result
            for key, old in reversed(trail):
                if key < 0:
                    uniform[-1 - key] = True
                else:
                    domains[key] = old
            for ci in touched:
                assigned[ci] -= 1
            colors[p] = -1
        return None

    try:
        bad = assign(0)
    except _Budget:
        return VerifyResult(VerifyStatus.UNKNOWN, None, nodes, m)
    if bad is None:
        return VerifyResult(VerifyStatus.RAMSEY, None, nodes, m)
    coloring = CopyColoring(r, {x_copies[p].image: bad[p] for p in range(m)})
    return VerifyResult(VerifyStatus.NOT_RAMSEY, coloring, nodes, m)


class FindStatus(enum.Enum):
    FOUND = "found"
    NOT_FOUND = "not-found"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SearchConfig:
    family: str = "chains"  # "chains" or "all"
    max_n: int = 12
    budget: int = 10**8


@dataclass(frozen=True)
class FindResult:
    status: FindStatus
    witness: Optional[PLStructure]
    candidates_checked: int
    max_n: int


def find_witness(
    pattern: PLStructure,
    target: PLStructure,
    r: int,
    mode: Semantics = Semantics.STRONG,
    config: SearchConfig = SearchConfig(),
) -> FindResult:
    """Smallest structure in the configured family that verifies as a witness.

    Candidates are tried by element count, then by canonical encoding; each
    one goes through verify_witness.  A verification that runs out of budget
    aborts the search with UNKNOWN rather than skipping the candidate.
    """
    if pattern.k != target.k:
        raise ArityMismatchError("pattern and target must share the same arity")
    if config.family not in ("chains", "all"):
        raise ValueError(f"unknown family {config.family!r}")

    k = pattern.k
    checked = 0
    for n in range(1, config.max_n + 1):
        if config.family == "chains":
            candidates = [chain(n, k)]
        else:
            candidates = enumerate_structures(n, k)
        for candidate in candidates:
            checked += 1
            result = verify_witness(pattern, target, candidate, r, mode, config.budget)
            if result.status is VerifyStatus.UNKNOWN:
                return FindResult(FindStatus.UNKNOWN, None, checked, config.max_n)
            if result.status is VerifyStatus.RAMSEY:
                return FindResult(FindStatus.FOUND, candidate, checked, config.max_n)
    return FindResult(FindStatus.NOT_FOUND, None, checked, config.max_n)


class SearchOracle:
    """Witness oracle backed by find_witness; answers are tagged verified."""

    def __init__(self, config: SearchConfig = SearchConfig(), mode: Semantics = Semantics.STRONG):
        self.config = config
        self.mode = mode

    def __call__(self, pattern: PLStructure, target: PLStructure, colors: int) -> tuple[PLStructure, str]:
        result = find_witness(pattern, target, colors, self.mode, self.config)
        if result.status is not FindStatus.FOUND:
            raise OracleFailure(
                f"no witness with at most {self.config.max_n} elements in the "
                f"{self.config.family} family for {colors} colors"
            )
        return result.witness, VERIFIED


@dataclass(frozen=True)
class ConstructionManifest:
    """Everything needed to replay an extraction deterministically."""

    pattern: PLStructure  # the structure whose copies get colored
    target: PLStructure   # the structure a monochromatic copy of is wanted
    plan: ProductPlan
    joined: JoinedStructure
    mode: Semantics = Semantics.STRONG

    @property
    def k(self) -> int:
        return self.pattern.k

    @property
    def host(self) -> PLStructure:
        return self.joined.product

    @property
    def r(self) -> int:
        return self.plan.base_colors


def synthesize_construction(
    pattern: PLStructure,
    target: PLStructure,
    r: int,
    oracle: Oracle,
    mode: Semantics = Semantics.STRONG,
    max_colors: int = 2**63 - 1,
) -> ConstructionManifest:
    """Build the joined host guaranteeing a monochromatic target copy.

    Slices the pattern and target into per-order single-extension views,
    plans a witness per order, and joins the witnesses.
    """
    if pattern.k != target.k:
        raise ArityMismatchError("pattern and target must share the same arity")
    pairs = [
        (order_slice(pattern, i), order_slice(target, i)) for i in range(pattern.k)
    ]
    plan = plan_product_witnesses(pairs, r, oracle, mode, max_colors)
    joined = join([c.witness for c in plan.coordinates])
    return ConstructionManifest(pattern, target, plan, joined, mode)


def extract_monochromatic_copy(
    manifest: ConstructionManifest, chi: CopyColoring
) -> tuple[Embedding, int]:
    """Extract a target copy all of whose pattern copies share one color.

    Restricts the coloring to canonical copies, pulls it back to component
    tuples, runs the per-coordinate product extraction, and assembles the
    chosen target component copies into one copy of the target in the host.
    """
    js = manifest.joined
    pattern = manifest.pattern
    mode = manifest.mode
    chi.check_total(enumerate_copies(pattern, js.product, mode))
    if chi.r != manifest.r:
        raise ValueError(f"coloring has {chi.r} colors, manifest expects {manifest.r}")

    copy_lists = manifest.plan.copy_lists()
    pulled = {
        combo: chi.colors[_assemble_image(js, pattern, combo).image]
        for combo in itertools.product(*copy_lists)
    }
    extraction = extract_product_monochromatic(
        manifest.plan, ProductColoring(chi.r, pulled)
    )
    assembled = assemble_canonical_copy(js, manifest.target, extraction.copies, mode)
    return assembled.assembled, extraction.color
