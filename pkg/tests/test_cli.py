import json

import pytest

from gsp4_local_zeta import config
from gsp4_local_zeta.cli import run


def test_hilbert(capsys):
    assert run(["hilbert", "5", "2", "5"]) == 0
    assert capsys.readouterr().out == "-1\n"
    assert run(["hilbert", "-1", "-1", "real"]) == 0
    assert capsys.readouterr().out == "-1\n"


def test_classify(capsys):
    assert run(["classify", "2", "5"]) == 0
    assert capsys.readouterr().out == "-1 (inert)\n"
    assert run(["classify", "-1", "2"]) == 0
    assert capsys.readouterr().out == "0 (ramified)\n"


def test_usage_errors(capsys):
    assert run(["--badflag"]) == 2
    assert run(["verify", "--case", "ramified"]) == 2
    assert run(["verify", "--case", "inert", "--q-values", "5"]) == 2
    assert run(["hilbert", "0", "1", "5"]) == 2
    assert "error:" in capsys.readouterr().err
    assert run(["classify", "3", "4"]) == 2


def test_help_exits_cleanly():
    assert run(["--help"]) == 0


def test_verify_writes_deterministic_json(tmp_path, capsys):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", "--case", "split", "--samples", "2", "--order", "4", "--seed", "3"]
    assert run(args + ["--output", str(first)]) == 0
    assert run(args + ["--output", str(second)]) == 0
    assert first.read_text() == second.read_text()

    data = json.loads(first.read_text())
    assert data["mode"] == "univariate"
    assert data["seed"] == 3
    assert all(check["pass"] for check in data["checks"])


def test_verify_series_output(capsys):
    assert run(["verify", "--case", "inert", "--mode", "series", "--samples", "2", "--order", "6"]) == 0
    out = capsys.readouterr().out
    assert "PASS  sample1.series_oracle" in out
    assert out.endswith("2/2 checks passed\n")


def test_tampered_run_fails(capsys):
    assert run(["verify", "--case", "inert", "--samples", "1", "--order", "4", "--tamper"]) == 1
    assert "first mismatch at t^1" in capsys.readouterr().out


def test_lfactor(capsys):
    assert run(["lfactor", "--chi1", "2", "--chi2", "3", "--twist", "-1"]) == 0
    out = capsys.readouterr().out
    assert "reciprocal roots: -1, -2, -1/2, -3, -1/3" in out


def test_bessel_coeffs(capsys):
    assert run(["bessel-coeffs", "--case", "inert", "--max-ell", "1", "--max-m", "1",
                "--chi0", "1", "--chi1", "1", "--chi2", "1", "--q", "9"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "l=0 m=0: 1"
    assert lines[2] == "l=1 m=0: 4/27"
    assert len(lines) == 4


@pytest.mark.parametrize("engine", ["numpy", "python"])
def test_coset_index(capsys, engine):
    assert run(["coset-index", "--p", "3", "--rho", "2", "--m", "2", "--engine", engine]) == 0
    assert "brute force: 12" in capsys.readouterr().out


def test_degenerate_split_series(capsys):
    assert run(["verify", "--case", "split", "--mode", "series", "--degenerate", "--samples", "2",
                "--order", "6"]) == 0
    assert "convention split_parameter: nu1 = nu2" in capsys.readouterr().out
    assert run(["verify", "--case", "split", "--degenerate", "--samples", "1"]) == 2


def test_term_ceiling_is_a_failed_run(capsys):
    previous = config.set_term_limit(10)
    try:
        assert run(["verify", "--case", "inert", "--mode", "symbolic"]) == 1
    finally:
        config.set_term_limit(previous)
    assert "aborted:" in capsys.readouterr().err
