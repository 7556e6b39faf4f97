import random

import pytest

from plramsey import CopyColoring, ChainOracle, chain, enumerate_copies, point, synthesize_construction
from plramsey.cli import main
from plramsey.formats import load_coloring, load_manifest, save_coloring, save_structure


@pytest.fixture()
def files(tmp_path):
    save_structure(str(tmp_path / "pt1.pls"), point())
    save_structure(str(tmp_path / "pt2.pls"), point(2))
    save_structure(str(tmp_path / "chain2.pls"), chain(2))
    save_structure(str(tmp_path / "chain3.pls"), chain(3))
    save_structure(str(tmp_path / "b2.pls"), chain(2, 2))
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_valid(files, capsys):
    code, out, _ = run(capsys, "validate", files / "chain3.pls")
    assert code == 0
    assert out.strip().endswith("RESULT: VALID")


def test_validate_invalid(files, capsys):
    bad = files / "bad.pls"
    bad.write_text("PLS 1\nn 2\nk 1\nrel 0 1\nlin 1 1 0\n")
    code, out, _ = run(capsys, "validate", bad)
    assert code == 2
    assert "RESULT: INVALID" in out


def test_copies_count(files, capsys):
    code, out, _ = run(
        capsys, "copies", "--pattern", files / "chain2.pls", "--host", files / "chain3.pls", "--count"
    )
    assert code == 0
    assert out.strip().splitlines()[-1] == "RESULT: 3"


def test_copies_listing(files, capsys):
    code, out, _ = run(
        capsys, "copies", "--pattern", files / "chain2.pls", "--host", files / "chain3.pls"
    )
    assert code == 0
    assert out.splitlines() == ["0 1", "0 2", "1 2", "RESULT: 3"]


def test_join_and_validate_output(files, capsys):
    out_path = files / "product.pls"
    code, out, _ = run(capsys, "join", files / "chain2.pls", files / "chain2.pls", "--out", out_path)
    assert code == 0
    assert "RESULT: OK" in out
    code, out, _ = run(capsys, "validate", out_path)
    assert code == 0


def test_canonical_writes_perm(files, capsys):
    scrambled = files / "scrambled.pls"
    scrambled.write_text("PLS 1\nn 2\nk 1\nrel 1 0\nlin 1 1 0\n")
    out_path = files / "canon.pls"
    code, out, _ = run(capsys, "canonical", scrambled, "--out", out_path)
    assert code == 0
    assert "perm 1 0" in out
    assert out_path.read_text() == "PLS 1\nn 2\nk 1\nrel 0 1\nlin 1 0 1\n"


def test_verify_not_ramsey_writes_counterexample(files, capsys):
    cx = files / "cx.col"
    code, out, _ = run(
        capsys,
        "verify",
        "--pattern", files / "pt1.pls",
        "--target", files / "chain2.pls",
        "--host", files / "chain2.pls",
        "--colors", 2,
        "--out", cx,
    )
    assert code == 2
    assert "RESULT: NOT_RAMSEY" in out
    chi = load_coloring(str(cx), point(), chain(2))
    assert chi.colors == {(0,): 0, (1,): 1}


def test_verify_ramsey(files, capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--pattern", files / "pt1.pls",
        "--target", files / "chain2.pls",
        "--host", files / "chain3.pls",
        "--colors", 2,
    )
    assert code == 0
    assert "RESULT: RAMSEY" in out


def test_verify_unknown_on_tiny_budget(files, capsys):
    save_structure(str(files / "chain9.pls"), chain(9))
    code, out, _ = run(
        capsys,
        "verify",
        "--pattern", files / "pt1.pls",
        "--target", files / "chain2.pls",
        "--host", files / "chain9.pls",
        "--colors", 8,
        "--budget", 3,
    )
    assert code == 2
    assert "RESULT: UNKNOWN" in out


def test_find_witness_found_and_not_found(files, capsys):
    out_path = files / "witness.pls"
    code, out, _ = run(
        capsys,
        "find-witness",
        "--pattern", files / "pt1.pls",
        "--target", files / "chain2.pls",
        "--colors", 2,
        "--out", out_path,
    )
    assert code == 0
    assert "RESULT: FOUND" in out
    assert out_path.read_text() == "PLS 1\nn 3\nk 1\nrel 0 1\nrel 1 2\nlin 1 0 1 2\n"

    code, out, _ = run(
        capsys,
        "find-witness",
        "--pattern", files / "pt1.pls",
        "--target", files / "chain3.pls",
        "--colors", 3,
        "--max-n", 4,
    )
    assert code == 2
    assert "RESULT: NOT_FOUND" in out


def test_synthesize_extract_verify_copy_pipeline(files, capsys):
    manifest_path = files / "run.main"
    code, out, _ = run(
        capsys,
        "synthesize",
        "--pattern", files / "pt2.pls",
        "--target", files / "b2.pls",
        "--colors", 2,
        "--out", manifest_path,
    )
    assert code == 0
    assert "host size 27" in out

    manifest = load_manifest(str(manifest_path))
    rng = random.Random(109)
    domain = enumerate_copies(manifest.pattern, manifest.host)
    chi = CopyColoring(2, {e.image: rng.randrange(2) for e in domain})
    chi_path = files / "chi.col"
    save_coloring(str(chi_path), chi)

    copy_path = files / "copy.txt"
    code, out, _ = run(
        capsys,
        "extract",
        "--manifest", manifest_path,
        "--coloring", chi_path,
        "--out", copy_path,
    )
    assert code == 0
    assert "RESULT: EXTRACTED" in out

    code, out, _ = run(
        capsys,
        "verify-copy",
        "--manifest", manifest_path,
        "--coloring", chi_path,
        "--copy", copy_path,
    )
    assert code == 0
    assert "RESULT: MONOCHROMATIC" in out


def test_verify_copy_flags_wrong_color(files, capsys):
    manifest_path = files / "run.main"
    manifest = synthesize_construction(point(2), chain(2, 2), 2, ChainOracle())
    from plramsey.formats import save_manifest_bundle

    save_manifest_bundle(str(manifest_path), manifest)
    domain = enumerate_copies(manifest.pattern, manifest.host)
    chi = CopyColoring(2, {e.image: i % 2 for i, e in enumerate(domain)})
    chi_path = files / "chi.col"
    save_coloring(str(chi_path), chi)
    bogus = files / "bogus.txt"
    bogus.write_text("COPY 1\nimage 0 13\ncolor 0\n")
    code, out, _ = run(
        capsys,
        "verify-copy",
        "--manifest", manifest_path,
        "--coloring", chi_path,
        "--copy", bogus,
    )
    # image (0, 13) is a chain in the 27-product but its two points got colors 0, 1
    assert code == 2
    assert "RESULT: NOT_MONOCHROMATIC" in out


def test_copies_weak_mode(files, capsys):
    from plramsey import antichain
    from plramsey.formats import save_structure as save

    save(str(files / "anti2.pls"), antichain(2))
    code, out, _ = run(
        capsys, "copies", "--pattern", files / "anti2.pls", "--host", files / "chain2.pls"
    )
    assert out.splitlines() == ["RESULT: 0"]
    code, out, _ = run(
        capsys,
        "copies", "--pattern", files / "anti2.pls", "--host", files / "chain2.pls",
        "--mode", "weak",
    )
    assert out.splitlines() == ["0 1", "RESULT: 1"]


def test_missing_file_is_an_error(files, capsys):
    code, _, err = run(capsys, "copies", "--pattern", files / "nope.pls", "--host", files / "chain2.pls")
    assert code == 1
    assert "error:" in err


def test_parse_error_reports_location(files, capsys):
    bad = files / "broken.pls"
    bad.write_text("PLS 1\nn 2\nk 1\nrel zero 1\nlin 1 0 1\n")
    code, out, err = run(capsys, "copies", "--pattern", bad, "--host", files / "chain2.pls")
    assert code == 1
    assert "broken.pls:4" in err
