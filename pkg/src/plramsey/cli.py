"""Command-line front end.

Every command ends with a single ``RESULT: <token>`` line on standard output
so scripted sweeps can branch on it.  Exit codes separate mathematically
negative outcomes (2: INVALID, NOT_RAMSEY, UNKNOWN, NOT_FOUND, a copy that
fails its monochromaticity check) from genuine errors (1).  Data goes to
standard output or files; run metadata goes to standard error.  Output is
byte-deterministic; ``--threads`` is accepted for compatibility and never
changes any output.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .errors import Error, NotMonochromaticError
from .orders import canonical_form, validate_structure
from .embeddings import Semantics, check_embedding, enumerate_copies
from .joins import join
from .engine import (
    FindStatus,
    SearchConfig,
    SearchOracle,
    VerifyStatus,
    extract_monochromatic_copy,
    find_witness,
    synthesize_construction,
    verify_witness,
)
from .product import ChainOracle
from . import formats

OK = 0
FAILURE = 1
NEGATIVE = 2


def _result(token) -> None:
    print(f"RESULT: {token}")


def _mode(args) -> Semantics:
    return Semantics(args.mode)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--mode", choices=["strong", "weak"], default="strong",
                        help="partial-order semantics for copies (default strong)")
    parser.add_argument("--threads", type=int, default=1,
                        help="accepted for compatibility; output never depends on it")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plramsey",
        description="Posets with linear extensions: copies, joins, Ramsey witnesses, extraction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a structure file")
    p.add_argument("file")
    _add_common(p)

    p = sub.add_parser("copies", help="enumerate copies of a pattern in a host")
    p.add_argument("--pattern", required=True)
    p.add_argument("--host", required=True)
    p.add_argument("--count", action="store_true", help="print only the number of copies")
    p.add_argument("--out", help="write copies (one per line) to this file")
    _add_common(p)

    p = sub.add_parser("join", help="join single-order structure files into one product structure")
    p.add_argument("factors", nargs="+")
    p.add_argument("--out", required=True)
    _add_common(p)

    p = sub.add_parser("canonical", help="relabel a structure into canonical form")
    p.add_argument("file")
    p.add_argument("--out", help="write the canonical structure here instead of stdout")
    _add_common(p)

    p = sub.add_parser("verify", help="decide whether a host is a Ramsey witness")
    p.add_argument("--pattern", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--host", required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--budget", type=int, default=10**8)
    p.add_argument("--out", help="write a counterexample coloring here when not Ramsey")
    _add_common(p)

    p = sub.add_parser("find-witness", help="search a family for the smallest Ramsey witness")
    p.add_argument("--pattern", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--family", choices=["chains", "all"], default="chains")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--budget", type=int, default=10**8)
    p.add_argument("--out", help="write the witness structure here")
    _add_common(p)

    p = sub.add_parser("synthesize", help="build a joined host plus manifest for extraction")
    p.add_argument("--pattern", required=True, help="structure whose copies get colored")
    p.add_argument("--target", required=True, help="structure to find a monochromatic copy of")
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--oracle", choices=["chain", "search"], default="chain")
    p.add_argument("--family", choices=["chains", "all"], default="chains")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--budget", type=int, default=10**8)
    p.add_argument("--out", required=True, help="manifest path; sibling data files share its stem")
    _add_common(p)

    p = sub.add_parser("extract", help="extract a monochromatic copy from a coloring")
    p.add_argument("--manifest", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--out", help="write the extracted copy here")
    _add_common(p)

    p = sub.add_parser("verify-copy", help="re-check an extracted copy against its coloring")
    p.add_argument("--manifest", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--copy", required=True)
    _add_common(p)

    return parser


def _cmd_validate(args) -> int:
    try:
        s = formats.load_structure(args.file, check=False)
    except Error as exc:
        # Show what failed, then report the data outcome.
        print(f"invalid: {exc}")
        _result("INVALID")
        return NEGATIVE
    report = validate_structure(s)
    if report.ok:
        _result("VALID")
        return OK
    for v in report.violations:
        print(f"violation: {v.message}")
    _result("INVALID")
    return NEGATIVE


def _cmd_copies(args) -> int:
    pattern = formats.load_structure(args.pattern)
    host = formats.load_structure(args.host)
    found = enumerate_copies(pattern, host, _mode(args))
    lines = [" ".join(str(h) for h in e.image) for e in found]
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("".join(line + "\n" for line in lines))
    elif not args.count:
        for line in lines:
            print(line)
    _result(len(found))
    return OK


def _cmd_join(args) -> int:
    factors = [formats.load_structure(p) for p in args.factors]
    js = join(factors)
    formats.save_structure(args.out, js.product, formats.join_comments(js.sizes))
    _result("OK")
    return OK


def _cmd_canonical(args) -> int:
    s = formats.load_structure(args.file)
    canon, perm = canonical_form(s)
    text = formats.serialize_structure(canon)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print("perm " + " ".join(str(p) for p in perm))
    _result("OK")
    return OK


def _cmd_verify(args) -> int:
    pattern = formats.load_structure(args.pattern)
    target = formats.load_structure(args.target)
    host = formats.load_structure(args.host)
    result = verify_witness(pattern, target, host, args.colors, _mode(args), args.budget)
    print(f"nodes: {result.nodes}", file=sys.stderr)
    if result.status is VerifyStatus.RAMSEY:
        _result("RAMSEY")
        return OK
    if result.status is VerifyStatus.UNKNOWN:
        _result("UNKNOWN")
        return NEGATIVE
    if args.out:
        formats.save_coloring(args.out, result.counterexample)
    _result("NOT_RAMSEY")
    return NEGATIVE


def _cmd_find_witness(args) -> int:
    pattern = formats.load_structure(args.pattern)
    target = formats.load_structure(args.target)
    config = SearchConfig(args.family, args.max_n, args.budget)
    result = find_witness(pattern, target, args.colors, _mode(args), config)
    print(f"candidates checked: {result.candidates_checked}", file=sys.stderr)
    if result.status is FindStatus.FOUND:
        if args.out:
            formats.save_structure(args.out, result.witness)
        print(f"witness size {result.witness.n}")
        _result("FOUND")
        return OK
    if result.status is FindStatus.UNKNOWN:
        _result("UNKNOWN")
        return NEGATIVE
    _result("NOT_FOUND")
    return NEGATIVE


def _cmd_synthesize(args) -> int:
    pattern = formats.load_structure(args.pattern)
    target = formats.load_structure(args.target)
    mode = _mode(args)
    if args.oracle == "chain":
        oracle = ChainOracle()
    else:
        oracle = SearchOracle(SearchConfig(args.family, args.max_n, args.budget), mode)
    manifest = synthesize_construction(pattern, target, args.colors, oracle, mode)
    written = formats.save_manifest_bundle(args.out, manifest)
    print(f"host size {manifest.host.n}")
    for name in written:
        print(f"wrote {name}", file=sys.stderr)
    _result("OK")
    return OK


def _cmd_extract(args) -> int:
    manifest = formats.load_manifest(args.manifest)
    chi = formats.load_coloring(args.coloring, manifest.pattern, manifest.host, manifest.mode)
    try:
        copy, color = extract_monochromatic_copy(manifest, chi)
    except NotMonochromaticError as exc:
        print(f"extraction failed: {exc}", file=sys.stderr)
        _result("NOT_MONOCHROMATIC")
        return FAILURE
    if args.out:
        formats.save_copy(args.out, copy, color)
    print("image " + " ".join(str(h) for h in copy.image))
    print(f"color {color}")
    _result("EXTRACTED")
    return OK


def _cmd_verify_copy(args) -> int:
    manifest = formats.load_manifest(args.manifest)
    chi = formats.load_coloring(args.coloring, manifest.pattern, manifest.host, manifest.mode)
    copy, color = formats.load_copy(args.copy)
    if not check_embedding(copy, manifest.target, manifest.host, manifest.mode):
        raise Error("copy file does not describe an embedding of the target into the host")
    mismatches = 0
    for inner in enumerate_copies(manifest.pattern, manifest.host, manifest.mode):
        if set(inner.image) <= set(copy.image) and chi.colors[inner.image] != color:
            mismatches += 1
    if mismatches:
        print(f"{mismatches} pattern copies inside the image disagree with color {color}")
        _result("NOT_MONOCHROMATIC")
        return NEGATIVE
    _result("MONOCHROMATIC")
    return OK


_COMMANDS = {
    "validate": _cmd_validate,
    "copies": _cmd_copies,
    "join": _cmd_join,
    "canonical": _cmd_canonical,
    "verify": _cmd_verify,
    "find-witness": _cmd_find_witness,
    "synthesize": _cmd_synthesize,
    "extract": _cmd_extract,
    "verify-copy": _cmd_verify_copy,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILURE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILURE


if __name__ == "__main__":
    sys.exit(main())
