"""Tests for the command-line interface.

The heavy subcommands (usmall, omega, verify) are covered through the library
calls in the other test modules; here we drive the cheap ones end to end and
check the exit-code contract.
"""

import io
import os
from pathlib import Path

import pytest

from e7dirac import cli
from frozen_values import HD_TWELVE, PHI_COEFF_ONE

FIXTURES = str(Path(__file__).resolve().parent.parent / "fixtures")


def run_cli(argv):
    out = io.StringIO()
    parser = cli.build_parser()
    args = parser.parse_args(argv)
    code = args.func(args, out)
    return code, out.getvalue()


def run_main(argv):
    """Through main(), so FixtureMissing handling is exercised too."""
    import contextlib

    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = cli.main(argv)
    return code, out.getvalue()


def test_chambers_output():
    code, text = run_cli(["chambers"])
    lines = text.splitlines()
    assert code == 0
    assert lines[0] == "#chamber\trho\trho_noncompact"
    assert lines[1].split("\t") == [
        "0", "0,1,2,3,4,5,-17/2,17/2", "0,0,0,0,0,9,-9/2,9/2"
    ], f"BUG: base chamber row wrong: {lines[1]}"
    assert lines[-1] == "# total\t56"
    assert len(lines) == 58


def test_chambers_pretty_format():
    code, text = run_cli(["chambers", "--format", "pretty"])
    assert code == 0
    lines = text.splitlines()
    assert lines[0].split() == ["chamber", "rho", "rho_noncompact"]
    assert lines[-1] == "total: 56"
    assert "\t" not in text


def test_phi_partition(fixture_dir):
    code, text = run_cli(["phi", "--fixtures", str(fixture_dir)])
    assert code == 0
    lines = text.splitlines()
    assert lines[1] == "1\t23"
    assert lines[-2] == "13\t13"
    assert lines[-1] == "# total\t178192"


def test_hj_example(fixture_dir):
    code, text = run_cli(["hj-example", "--fixtures", str(fixture_dir)])
    assert code == 0
    body = dict(line.split("\t") for line in text.splitlines()[1:])
    assert body == {
        "parameters": "525",
        "fully_supported": "246",
        "nu_norm_sq_le_399/2": "218",
        "nu_norm_sq_lt_94": "29",
    }, f"BUG: funnel counts wrong: {body}"


def test_spin_lkt(fixture_dir):
    code, text = run_cli(["spin-lkt", "--fixtures", str(fixture_dir)])
    assert code == 0
    body = dict(line.split("\t") for line in text.splitlines()[1:])
    assert body["k_types"] == "157"
    assert body["min_spin_norm_sq"] == "159/2"
    assert body["hd_nonzero"] == "false"


def test_strings(fixture_dir):
    code, text = run_cli(["strings", "--fixtures", str(fixture_dir)])
    assert code == 0
    lines = text.splitlines()
    assert lines[1:8] == [
        "N_0\t56", "N_1\t84", "N_2\t102", "N_3\t133",
        "N_4\t164", "N_5\t181", "N_6\t158",
    ]
    assert lines[-1] == "# total\t878"


def test_dirac_candidates_default_char():
    code, text = run_cli(["dirac-candidates"])
    assert code == 0
    lines = text.splitlines()
    assert lines[-1] == "# total\t12"
    got = {tuple(int(c) for c in row.split("\t")[0].split(","))
           for row in lines[1:-1]}
    assert got == HD_TWELVE, f"BUG: candidate set differs: {sorted(got)}"


def test_dirac_candidates_scalar_pair():
    code, text = run_cli(["dirac-candidates", "--inf-char", "1,1,1,0,1,0,1"])
    assert code == 0
    lines = text.splitlines()
    assert lines[-1] == "# total\t2"
    got = {row.split("\t")[0] for row in lines[1:-1]}
    assert got == {"0,0,0,0,0,0,3", "0,0,0,0,0,0,-3"}


def test_inline_census_slice_matches_frozen():
    # the verifier carries its own copy of the 23 size-1 census members
    assert cli.SMALLEST_CENSUS_SLICE == PHI_COEFF_ONE


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.build_parser().parse_args(["no-such-command"])
    assert exc.value.code == 2


def test_bad_inf_char_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.build_parser().parse_args(["dirac-candidates", "--inf-char", "1,2"])
    assert exc.value.code == 2
    assert "7 comma-separated" in capsys.readouterr().err


def test_missing_fixtures_exits_3(monkeypatch):
    monkeypatch.delenv("DIRAC_FIXTURES", raising=False)
    code, _ = run_main(["phi"])
    assert code == 3
    code, _ = run_main(["strings", "--fixtures", "/no/such/dir"])
    assert code == 3


def test_env_fallback(fixture_dir, monkeypatch):
    monkeypatch.setenv("DIRAC_FIXTURES", str(fixture_dir))
    code, text = run_main(["strings"])
    assert code == 0
    assert text.splitlines()[-1] == "# total\t878"


def test_corrupt_fixture_exits_3(tmp_path, monkeypatch):
    (tmp_path / "dirac_counts.txt").write_text("empty | 56\nbogus line\n")
    code, _ = run_main(["strings", "--fixtures", str(tmp_path)])
    assert code == 3


def test_byte_identical_reruns(fixture_dir):
    argv = ["hj-example", "--fixtures", str(fixture_dir)]
    assert run_cli(argv) == run_cli(argv), "BUG: output not deterministic"
    argv = ["chambers"]
    assert run_cli(argv) == run_cli(argv)
