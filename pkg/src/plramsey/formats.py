"""Text file formats: structures, colorings, manifests, extracted copies.

All formats are line-oriented; "#" starts a comment and blank lines are
skipped.  Serialization is canonical (relation lines are the sorted
transitive reduction, linear orders come in index order), so parsing a
serialized structure and serializing it again reproduces the bytes.
Nothing derivable is ever stored: manifests hold file references only and
all bookkeeping is recomputed at load time.
"""

from __future__ import annotations

import os
from typing import Optional, Sequence

from .errors import Error, ParseError
from .orders import (
    LinearOrder,
    PLStructure,
    order_slice,
    transitive_closure_strict,
    validate_structure,
)
from .embeddings import Embedding, Semantics, enumerate_copies
from .engine import ConstructionManifest, CopyColoring
from .joins import join
from .product import PlanCoordinate, ProductPlan


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_int(token: str, source: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(source, lineno, f"expected an integer {what}, got {token!r}") from None


# ---------------------------------------------------------------------------
# structure files


def serialize_structure(s: PLStructure, comments: Sequence[str] = ()) -> str:
    lines = ["PLS 1"]
    lines.extend(f"# {c}" for c in comments)
    lines.append(f"n {s.n}")
    lines.append(f"k {s.k}")
    for a, b in s.poset.cover_pairs():
        lines.append(f"rel {a} {b}")
    for i, lin in enumerate(s.lins, start=1):
        lines.append(f"lin {i} " + " ".join(str(e) for e in lin.order))
    return "\n".join(lines) + "\n"


def parse_structure(text: str, source: str = "<structure>", check: bool = True) -> PLStructure:
    lines = list(_content_lines(text))
    if not lines or lines[0][1] != "PLS 1":
        lineno = lines[0][0] if lines else 1
        raise ParseError(source, lineno, "expected header 'PLS 1'")
    n: Optional[int] = None
    k: Optional[int] = None
    rels: list[tuple[int, int]] = []
    lin_rows: dict[int, tuple[int, ...]] = {}
    for lineno, line in lines[1:]:
        tokens = line.split()
        tag = tokens[0]
        if tag == "n" and len(tokens) == 2:
            n = _parse_int(tokens[1], source, lineno, "element count")
        elif tag == "k" and len(tokens) == 2:
            k = _parse_int(tokens[1], source, lineno, "order count")
        elif tag == "rel" and len(tokens) == 3:
            a = _parse_int(tokens[1], source, lineno, "element")
            b = _parse_int(tokens[2], source, lineno, "element")
            rels.append((a, b))
        elif tag == "lin" and len(tokens) >= 2:
            i = _parse_int(tokens[1], source, lineno, "order index")
            if i in lin_rows:
                raise ParseError(source, lineno, f"duplicate lin {i}")
            lin_rows[i] = tuple(
                _parse_int(t, source, lineno, "element") for t in tokens[2:]
            )
        else:
            raise ParseError(source, lineno, f"unrecognized line {line!r}")
    if n is None:
        raise ParseError(source, 1, "missing 'n' line")
    if k is None:
        raise ParseError(source, 1, "missing 'k' line")
    if sorted(lin_rows) != list(range(1, k + 1)):
        raise ParseError(source, 1, f"expected lin lines 1..{k}, got {sorted(lin_rows)}")
    for i, row in lin_rows.items():
        if len(row) != n:
            raise ParseError(source, 1, f"lin {i} lists {len(row)} elements, expected {n}")
        if sorted(row) != list(range(n)):
            raise ParseError(source, 1, f"lin {i} is not a permutation of 0..{n - 1}")
    try:
        poset = transitive_closure_strict(n, rels)
    except Error as exc:
        raise ParseError(source, 1, str(exc)) from exc
    except IndexError as exc:
        raise ParseError(source, 1, str(exc)) from exc
    lins = []
    for i in range(1, k + 1):
        rank = [0] * n
        for pos, e in enumerate(lin_rows[i]):
            rank[e] = pos
        lins.append(LinearOrder(tuple(rank)))
    s = PLStructure(poset, tuple(lins))
    if check:
        report = validate_structure(s)
        if not report.ok:
            first = report.violations[0]
            raise ParseError(source, 1, f"invalid structure: {first.message}")
    return s


def load_structure(path: str, check: bool = True) -> PLStructure:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_structure(fh.read(), path, check)


def save_structure(path: str, s: PLStructure, comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_structure(s, comments))


def join_comments(sizes: Sequence[int]) -> list[str]:
    return [
        "join of " + " x ".join(str(n) for n in sizes) + " factor elements",
        "flat index of (z_1, ..., z_k) is sum(z_i * prod(n_j for j > i)), row-major",
    ]


# ---------------------------------------------------------------------------
# coloring files


def serialize_coloring(chi: CopyColoring) -> str:
    lines = ["COL 1", f"r {chi.r}"]
    for image in sorted(chi.colors):
        lines.append("c " + " ".join(str(e) for e in image) + f" : {chi.colors[image]}")
    return "\n".join(lines) + "\n"


def parse_coloring(
    text: str,
    pattern: PLStructure,
    host: PLStructure,
    mode: Semantics = Semantics.STRONG,
    source: str = "<coloring>",
) -> CopyColoring:
    lines = list(_content_lines(text))
    if not lines or lines[0][1] != "COL 1":
        lineno = lines[0][0] if lines else 1
        raise ParseError(source, lineno, "expected header 'COL 1'")
    r: Optional[int] = None
    colors: dict[tuple[int, ...], int] = {}
    for lineno, line in lines[1:]:
        tokens = line.split()
        if tokens[0] == "r" and len(tokens) == 2:
            r = _parse_int(tokens[1], source, lineno, "color count")
        elif tokens[0] == "c":
            if ":" not in tokens:
                raise ParseError(source, lineno, "copy line needs ': <color>'")
            sep = tokens.index(":")
            image = tuple(_parse_int(t, source, lineno, "element") for t in tokens[1:sep])
            if len(tokens) != sep + 2:
                raise ParseError(source, lineno, "expected exactly one color after ':'")
            color = _parse_int(tokens[sep + 1], source, lineno, "color")
            if image in colors:
                raise ParseError(source, lineno, f"duplicate copy {' '.join(map(str, image))}")
            colors[image] = color
        else:
            raise ParseError(source, lineno, f"unrecognized line {line!r}")
    if r is None:
        raise ParseError(source, 1, "missing 'r' line")
    chi = CopyColoring(r, colors)
    try:
        chi.check_total(enumerate_copies(pattern, host, mode))
    except ValueError as exc:
        raise ParseError(source, 1, str(exc)) from exc
    return chi


def load_coloring(path: str, pattern: PLStructure, host: PLStructure, mode: Semantics = Semantics.STRONG) -> CopyColoring:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_coloring(fh.read(), pattern, host, mode, path)


def save_coloring(path: str, chi: CopyColoring) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_coloring(chi))


# ---------------------------------------------------------------------------
# copy files


def serialize_copy(e: Embedding, color: int) -> str:
    return "COPY 1\nimage " + " ".join(str(h) for h in e.image) + f"\ncolor {color}\n"


def parse_copy(text: str, source: str = "<copy>") -> tuple[Embedding, int]:
    lines = list(_content_lines(text))
    if not lines or lines[0][1] != "COPY 1":
        lineno = lines[0][0] if lines else 1
        raise ParseError(source, lineno, "expected header 'COPY 1'")
    image: Optional[tuple[int, ...]] = None
    color: Optional[int] = None
    for lineno, line in lines[1:]:
        tokens = line.split()
        if tokens[0] == "image":
            image = tuple(_parse_int(t, source, lineno, "element") for t in tokens[1:])
        elif tokens[0] == "color" and len(tokens) == 2:
            color = _parse_int(tokens[1], source, lineno, "color")
        else:
            raise ParseError(source, lineno, f"unrecognized line {line!r}")
    if image is None:
        raise ParseError(source, 1, "missing 'image' line")
    if color is None:
        raise ParseError(source, 1, "missing 'color' line")
    return Embedding(image), color


def load_copy(path: str) -> tuple[Embedding, int]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_copy(fh.read(), path)


def save_copy(path: str, e: Embedding, color: int) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_copy(e, color))


# ---------------------------------------------------------------------------
# manifest files


def plan_from_witnesses(
    pattern: PLStructure,
    target: PLStructure,
    witnesses: Sequence[PLStructure],
    r: int,
    mode: Semantics = Semantics.STRONG,
) -> ProductPlan:
    """Rebuild the deterministic plan bookkeeping from stored witnesses."""
    k = pattern.k
    if len(witnesses) != k:
        raise ValueError(f"expected {k} witnesses, got {len(witnesses)}")
    counts = []
    slices = []
    for i in range(k):
        x_i = order_slice(pattern, i)
        y_i = order_slice(target, i)
        counts.append(len(enumerate_copies(x_i, witnesses[i], mode)))
        slices.append((x_i, y_i))
    coords = []
    suffix = 1
    for i in range(k - 1, -1, -1):
        needed = r**suffix if r > 1 else 1
        x_i, y_i = slices[i]
        coords.append(PlanCoordinate(x_i, y_i, witnesses[i], needed, counts[i], "asserted"))
        suffix *= counts[i]
    coords.reverse()
    return ProductPlan(r, tuple(coords), mode)


def serialize_manifest(
    k: int,
    mode: Semantics,
    r: int,
    pattern_path: str,
    target_path: str,
    witness_paths: Sequence[str],
    host_path: str,
) -> str:
    lines = ["MAIN 1", f"k {k}", f"mode {mode.value}", f"r {r}"]
    lines.append(f"a {pattern_path}")
    lines.append(f"b {target_path}")
    for i, path in enumerate(witness_paths, start=1):
        lines.append(f"z {i} {path}")
    lines.append(f"c {host_path}")
    return "\n".join(lines) + "\n"


def save_manifest_bundle(path: str, manifest: ConstructionManifest) -> list[str]:
    """Write the manifest and every referenced structure next to it.

    File names derive from the manifest stem, so a bundle is self-contained
    and relocatable.  Returns the written file paths.
    """
    directory = os.path.dirname(os.path.abspath(path))
    stem = os.path.basename(path)
    if stem.endswith(".main"):
        stem = stem[: -len(".main")]
    names = {
        "a": f"{stem}.a.pls",
        "b": f"{stem}.b.pls",
        "c": f"{stem}.c.pls",
    }
    witness_names = [f"{stem}.z{i + 1}.pls" for i in range(manifest.k)]
    written = []
    os.makedirs(directory, exist_ok=True)
    save_structure(os.path.join(directory, names["a"]), manifest.pattern)
    save_structure(os.path.join(directory, names["b"]), manifest.target)
    for name, coord in zip(witness_names, manifest.plan.coordinates):
        save_structure(os.path.join(directory, name), coord.witness)
    save_structure(
        os.path.join(directory, names["c"]),
        manifest.host,
        join_comments(manifest.joined.sizes),
    )
    text = serialize_manifest(
        manifest.k, manifest.mode, manifest.r, names["a"], names["b"], witness_names, names["c"]
    )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    written.extend([names["a"], names["b"], *witness_names, names["c"]])
    return written


def load_manifest(path: str) -> ConstructionManifest:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    lines = list(_content_lines(text))
    if not lines or lines[0][1] != "MAIN 1":
        lineno = lines[0][0] if lines else 1
        raise ParseError(path, lineno, "expected header 'MAIN 1'")
    k: Optional[int] = None
    mode: Optional[Semantics] = None
    r: Optional[int] = None
    pattern_path = target_path = host_path = None
    witness_paths: dict[int, str] = {}
    for lineno, line in lines[1:]:
        tokens = line.split()
        tag = tokens[0]
        if tag == "k" and len(tokens) == 2:
            k = _parse_int(tokens[1], path, lineno, "arity")
        elif tag == "mode" and len(tokens) == 2:
            try:
                mode = Semantics(tokens[1])
            except ValueError:
                raise ParseError(path, lineno, f"unknown mode {tokens[1]!r}") from None
        elif tag == "r" and len(tokens) == 2:
            r = _parse_int(tokens[1], path, lineno, "color count")
        elif tag == "a" and len(tokens) == 2:
            pattern_path = tokens[1]
        elif tag == "b" and len(tokens) == 2:
            target_path = tokens[1]
        elif tag == "z" and len(tokens) == 3:
            witness_paths[_parse_int(tokens[1], path, lineno, "index")] = tokens[2]
        elif tag == "c" and len(tokens) == 2:
            host_path = tokens[1]
        else:
            raise ParseError(path, lineno, f"unrecognized line {line!r}")
    if None in (k, mode, r) or pattern_path is None or target_path is None or host_path is None:
        raise ParseError(path, 1, "manifest is missing required lines")
    if sorted(witness_paths) != list(range(1, k + 1)):
        raise ParseError(path, 1, f"expected witness lines z 1..{k}")

    base = os.path.dirname(os.path.abspath(path))

    def resolve(p: str) -> str:
        return p if os.path.isabs(p) else os.path.join(base, p)

    pattern = load_structure(resolve(pattern_path))
    target = load_structure(resolve(target_path))
    witnesses = [load_structure(resolve(witness_paths[i])) for i in range(1, k + 1)]
    stored_host = load_structure(resolve(host_path))
    if pattern.k != k or target.k != k:
        raise ParseError(path, 1, "pattern/target arity does not match the manifest")
    plan = plan_from_witnesses(pattern, target, witnesses, r, mode)
    joined = join(witnesses)
    if joined.product != stored_host:
        raise ParseError(path, 1, "stored host file does not match the recomputed join")
    return ConstructionManifest(pattern, target, plan, joined, mode)
