"""Tests for the meander-py command line."""

import json

import pytest

from meander_py import __version__
from meander_py.cli import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, main

pytestmark = pytest.mark.usefixtures("isolated_config_dir")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize("text, expected", [
    ("5,2,2|2,4,3", "index_sl=2 frobenius=false"),
    ("3,2,2|2,5", "index_sl=0 frobenius=true"),
    ("9|9", "index_sl=8"),
])
def test_index(capsys, text, expected):
    """Test the index line for a few pairs."""
    code, out, _ = run(capsys, "index", text)
    assert code == EXIT_OK
    assert expected in out


def test_index_json(capsys):
    """Test the JSON form of the index command."""
    code, out, _ = run(capsys, "index", "5,2,2|2,4,3", "--json")
    assert code == EXIT_OK
    assert json.loads(out)["cycles"] == 1


def test_parse_error_exit_code(capsys):
    """Test that a bad pair exits 2 with a caret on stderr."""
    code, out, err = run(capsys, "index", "5,2|6")
    assert code == EXIT_USAGE
    assert out == ""
    assert "5,2|6\n   ^" in err


@pytest.mark.parametrize("text", ["²|2", "٣|3"])
def test_non_ascii_digits_are_a_usage_error(capsys, text):
    """Test that non-ASCII digits are rejected as a usage error."""
    code, out, err = run(capsys, "index", text)
    assert code == EXIT_USAGE
    assert out == ""
    assert f"{text}\n^" in err


def test_perm(capsys):
    """Test the permutation lines printed for a pair."""
    code, out, _ = run(capsys, "perm", "5,2,2|2,4,3")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "sigma=(1,4)(2,5)(3,7,8,9,6)"
    assert lines[1] == "t=5,4,3,2,1,7,6,9,8"
    assert lines[2] == "b=2,1,6,5,4,3,9,8,7"
    assert lines[3] == "n_cycle=false"


def test_perm_verbose_cycles(capsys):
    """Test that fixed points are shown with --verbose-cycles."""
    _, out, _ = run(capsys, "perm", "1|1", "--verbose-cycles")
    assert out.splitlines()[0] == "sigma=(1)"


def test_frobenius(capsys):
    """Test the Frobenius report of an opposite maximal pair."""
    code, out, _ = run(capsys, "frobenius", "2,3|4,1")
    assert code == EXIT_OK
    assert "frobenius=true index_sl=0" in out
    assert "family=opposite_maximal(a=2,b=3,c=4,d=1) closed_form=true" in out
    assert "necessary=ok" in out


def test_frobenius_lists_violations(capsys):
    """Test that failed necessary conditions are listed."""
    _, out, _ = run(capsys, "frobenius", "2,2|2,2")
    assert "necessary=OddCount!=2 (count 0); EqualPartialSums(r=1)" in out


def test_shape(capsys):
    """Test the shape grid and dimensions."""
    code, out, _ = run(capsys, "shape", "1,1|2")
    assert code == EXIT_OK
    assert out.splitlines() == ["* *", ". *", "dim_gl=3 dim_sl=2"]


def test_oracle(capsys):
    """Test the oracle command against the meander index."""
    code, out, _ = run(capsys, "oracle", "5,2,2|2,4,3", "--trials", "3")
    assert code == EXIT_OK
    assert "index_gl=3 index_sl=2" in out
    assert "agree=true" in out


def test_oracle_bad_prime(capsys):
    """Test that a too small prime is rejected."""
    code, _, err = run(capsys, "oracle", "1,1|2", "--prime", "7")
    assert code == EXIT_VIOLATION
    assert "rejected" in err


def test_rmatrix(capsys):
    """Test the r-matrix document of a Frobenius pair."""
    code, out, _ = run(capsys, "rmatrix", "1,1|2")
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["cybe_residual"] == 0
    assert document["rmatrix"]["pair"] == "1,1|2"


def test_rmatrix_non_frobenius(capsys):
    """Test the r-matrix command on a non-Frobenius pair."""
    code, out, _ = run(capsys, "rmatrix", "5,2,2|2,4,3", "--attempts", "3")
    assert code == EXIT_OK
    assert out.strip() == "not Frobenius: index_sl=2"


def test_render(capsys):
    """Test DOT output of a single vertex."""
    code, out, _ = run(capsys, "render", "1|1")
    assert code == EXIT_OK
    assert '"1";' in out
    assert "--" not in out


def test_render_to_file(capsys, tmp_path):
    """Test writing a modified TikZ picture to a file."""
    target = tmp_path / "m.tex"
    code, out, _ = run(capsys, "render", "5,2,2|2,4,3", "--modified", "--format", "tikz",
                       "--output", str(target))
    assert code == EXIT_OK
    assert out == ""
    assert "% bottom loop at 8" in target.read_text(encoding="utf-8")


def test_sweep_csv_is_reproducible(capsys):
    """Test that two CSV sweeps print the same output."""
    _, first, _ = run(capsys, "sweep", "--n", "4", "--format", "csv")
    _, second, _ = run(capsys, "sweep", "--n", "4", "--format", "csv")
    assert first == second
    assert first.splitlines()[0].startswith("top,bottom,n,")
    assert len(first.splitlines()) == 1 + 64


def test_sweep_summary(capsys):
    """Test the summary lines of a small sweep."""
    code, out, _ = run(capsys, "sweep", "--n-min", "1", "--n-max", "2")
    assert code == EXIT_OK
    assert out.splitlines()[1] == "1,1,1,0"


def test_sweep_needs_a_range(capsys):
    """Test that a sweep without --n-max is a usage error."""
    code, _, err = run(capsys, "sweep", "--n-min", "3")
    assert code == EXIT_USAGE
    assert "--n-max" in err


def test_sweep_rejects_unknown_format(capsys):
    """Test that argparse refuses an unknown format."""
    with pytest.raises(SystemExit) as info:
        main(["sweep", "--n", "3", "--format", "xml"])
    assert info.value.code == EXIT_USAGE


@pytest.mark.parametrize("max_n", ["2", "6"])
def test_verify_families(capsys, max_n):
    """Test verify-families for small bounds."""
    code, out, _ = run(capsys, "verify-families", "--max-n", max_n)
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "OK"
    assert "maximal_parabolic:" in out


def test_verify_families_too_small(capsys):
    """Test that --max-n below 2 is a usage error."""
    code, _, _ = run(capsys, "verify-families", "--max-n", "1")
    assert code == EXIT_USAGE


def test_verify_families_reports_violation(capsys, monkeypatch):
    """Test that a wrong closed form exits 1 naming the pair."""
    from meander_py import enumeration
    monkeypatch.setattr(enumeration, "closed_form_frobenius", lambda tag: True)
    code, _, err = run(capsys, "verify-families", "--max-n", "4")
    assert code == EXIT_VIOLATION
    assert "2,2|4" in err


def test_config_show_and_create(capsys, isolated_config_dir):
    """Test showing and creating the configuration file."""
    code, out, _ = run(capsys, "config", "--show")
    assert code == EXIT_OK
    assert "oracle:" in out

    code, out, _ = run(capsys, "config", "--create")
    assert code == EXIT_OK
    assert (isolated_config_dir / "config.yaml").exists()


def test_config_file_option(capsys, tmp_path):
    """Test reading settings from --config."""
    path = tmp_path / "custom.yaml"
    path.write_text("render:\n  format: tikz\n", encoding="utf-8")
    _, out, _ = run(capsys, "-c", str(path), "render", "2|2")
    assert "\\begin{tikzpicture}" in out


def test_no_command_prints_help(capsys):
    """Test that no subcommand prints usage."""
    code, out, _ = run(capsys)
    assert code == EXIT_USAGE
    assert "usage:" in out


def test_version(capsys):
    """Test --version."""
    code, out, _ = run(capsys, "--version")
    assert code == EXIT_OK
    assert __version__ in out
