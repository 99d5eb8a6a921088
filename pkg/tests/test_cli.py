"""Define tests for the command line."""
import json

import pytest

from pyfekete import const
from pyfekete.cli import build_parser, main, suite_params


def test_malformed_argument():
    """Tests a non-integer prime is a usage error."""
    assert main(["certify", "--p", "abc"]) == const.EXIT_USAGE


def test_missing_command():
    """Tests a command is required."""
    assert main([]) == const.EXIT_USAGE


def test_version(capsys):
    """Tests --version exits cleanly."""
    assert main(["--version"]) == const.EXIT_OK
    assert const.__version__ in capsys.readouterr().out


@pytest.mark.parametrize("value", ["15", "7"])
def test_certify_domain_error(tmp_path, capsys, value):
    """Tests composites and small primes exit with the usage code."""
    # Act
    code = main(["certify", "--p", value, "--out", str(tmp_path)])
    # Assert
    assert code == const.EXIT_USAGE
    assert capsys.readouterr().err.startswith("error: ")


def test_invalid_range(tmp_path):
    """Tests an interval starting below 2."""
    assert main(["gauss", "--pmin", "1", "--out", str(tmp_path)]) == const.EXIT_USAGE


def test_gauss_run(tmp_path, capsys):
    """Tests a small run writes byte-identical reports with LF endings."""
    # Arrange
    argv = ["gauss", "--pmax", "60", "--no-timestamps", "--threads", "2"]
    # Act
    first_code = main(argv + ["--out", str(tmp_path / "a")])
    second_code = main(argv + ["--out", str(tmp_path / "b")])
    # Assert
    assert first_code == second_code == const.EXIT_OK
    assert "gauss: 3 pass, 0 fail" in capsys.readouterr().out
    first = (tmp_path / "a" / "gauss.json").read_bytes()
    assert first == (tmp_path / "b" / "gauss.json").read_bytes()
    report = json.loads(first.decode("utf-8"))
    assert report["params"] == {"pmin": 3, "pmax": 60}
    assert report["summary"]["exit_code"] == 0
    table = (tmp_path / "a" / "gauss_gauss.csv").read_bytes()
    assert b"\r\n" not in table
    assert table.startswith(b"p,p_mod_4,max_modulus_error,abs_f_at_one,sign_ok\n")


def test_suite_params_seed():
    """Tests only seeded commands receive the seed."""
    # Arrange
    parser = build_parser()
    # Act
    ensemble = suite_params(parser.parse_args(["ensemble", "--seed", "9"]))
    gauss = suite_params(parser.parse_args(["gauss", "--seed", "9"]))
    # Assert
    assert ensemble == {
        "n2": const.DEFAULT_ENSEMBLE_N2,
        "n0": const.DEFAULT_ENSEMBLE_N0,
        "samples": const.DEFAULT_ENSEMBLE_SAMPLES,
        "seed": 9,
    }
    assert "seed" not in gauss


def test_cdelta_params():
    """Tests the repeated delta option and the oracle switch."""
    args = build_parser().parse_args(["cdelta", "--delta", "0.1", "0.2", "--no-oracle"])
    params = suite_params(args)
    assert params["deltas"] == [0.1, 0.2]
    assert params["oracle"] is False
