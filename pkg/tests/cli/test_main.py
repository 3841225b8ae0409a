from importlib import import_module

import numpy as np
import pytest

import shotnoise.cli.selfcheck as selfcheck
from shotnoise.cli import main, read_samples, run_selfcheck
from shotnoise.cli.selfcheck import CheckOutcome
from shotnoise.exceptions import (
    ConfigurationError,
    ConvergenceError,
    DomainError,
    IntegrandError,
    InvalidApproximationError,
)

# The package re-exports main(), which shadows the module attribute.
cli_main = import_module("shotnoise.cli.main")

SMALL_RUN = ["--samples", "300", "--steps", "20", "--seed", "1"]


@pytest.mark.parametrize(
    "argv", [[], ["--bogus"], ["simulate", "--samples", "many"]]
)
def test_usage_errors(argv):
    assert main(argv) == 2


def test_help(capsys):
    assert main(["--help"]) == 0
    assert "simulate" in capsys.readouterr().out


def test_simulate_writes_reproducible_samples(tmp_path):
    first, second = tmp_path / "first.txt", tmp_path / "second.txt"
    argv = ["simulate", "--spec", "fixed:1+det", *SMALL_RUN]

    assert main([*argv, "--out", str(first)]) == 0
    assert main([*argv, "--workers", "3", "--out", str(second)]) == 0

    text = first.read_text()
    samples = read_samples(first)

    assert text.startswith("# command: simulate\n")
    assert "# spec: fixed:1+det\n" in text
    assert samples.shape == (300,)
    assert (samples > 0.0).all()
    # same samples whatever the worker count
    np.testing.assert_array_equal(samples, read_samples(second))


def test_simulate_to_stdout(capsys):
    assert main(["simulate", "--spec", "gamma:1+laplace:1", *SMALL_RUN]) == 0

    out = capsys.readouterr().out
    data = [line for line in out.splitlines() if not line.startswith("#")]

    assert len(data) == 300


@pytest.mark.parametrize(
    "error, code",
    [
        (ConvergenceError("series did not settle"), 1),
        (IntegrandError("NaN integrand"), 1),
        (InvalidApproximationError("rate does not decay"), 1),
        (ConfigurationError("bad option"), 2),
        (DomainError("u out of range"), 2),
    ],
)
def test_library_errors_map_to_exit_codes(monkeypatch, capsys, error, code):
    def failing(cfg):
        raise error

    monkeypatch.setattr(cli_main, "run_simulate", failing)

    assert main(["simulate", *SMALL_RUN]) == code
    assert str(error) in capsys.readouterr().err


def test_compare_unsupported_law(capsys):
    argv = ["compare", "--spec", "gamma:2+gamma:1", *SMALL_RUN]

    assert main(argv) == 2
    assert "shotnoise: error:" in capsys.readouterr().err


def test_compare_missing_cdf(capsys):
    argv = ["compare", "--spec", "gamma:1+gamma:2", "--quantity", "cdf"]

    assert main([*argv, *SMALL_RUN]) == 2


def test_bad_config_file(tmp_path):
    argv = ["simulate", "--config", str(tmp_path / "missing.cfg")]

    assert main(argv) == 2


def test_unwritable_output(tmp_path):
    out = tmp_path / "missing" / "samples.txt"

    assert main(["simulate", *SMALL_RUN, "--out", str(out)]) == 2


def test_compare_fixed_exponent(tmp_path):
    out = tmp_path / "table.csv"
    argv = [
        "compare",
        "--spec",
        "fixed:1+det",
        "--grid",
        "0.1:2:20",
        "--samples",
        "4000",
        "--steps",
        "60",
        "--out",
        str(out),
    ]

    assert main(argv) == 0

    lines = out.read_text().splitlines()
    header = [line for line in lines if line.startswith("#")]
    rows = [line for line in lines if not line.startswith("#")]

    assert "# command: compare" in header
    assert rows[0].split(",")[0] == "u"
    assert len(rows) == 21

    summary = dict(
        item.split("=") for item in lines[-1].split(": ")[1].split()
    )

    assert float(summary["ks_distance"]) < 0.05
    assert float(summary["max_density_deviation"]) < 6.0


@pytest.mark.slow
def test_compare_symmetric_preset(tmp_path):
    out = tmp_path / "figure7.csv"
    argv = ["compare", "--figure", "7", "--grid", "0.5:3:6", *SMALL_RUN]

    assert main([*argv, "--out", str(out)]) == 0
    assert "# variable: |U|" in out.read_text()


def _patch_checks(monkeypatch, checks):
    monkeypatch.setattr(selfcheck, "QUICK_CHECKS", tuple(checks))


def test_selfcheck_exit_codes(monkeypatch, capsys):
    _patch_checks(monkeypatch, [("exact", lambda: (0.0, 1e-9))])

    assert main(["selfcheck"]) == 0
    assert "PASS exact" in capsys.readouterr().out

    _patch_checks(monkeypatch, [("loose", lambda: (1e-3, 1e-6))])

    assert main(["selfcheck"]) == 1
    assert "1 failed" in capsys.readouterr().out


def test_selfcheck_records_raising_checks(monkeypatch):
    def broken():
        raise DomainError("out of range")

    _patch_checks(monkeypatch, [("broken", broken)])
    report = run_selfcheck("quick")
    outcome = report.outcomes[0]

    assert not report.passed
    assert report.exit_code == 1
    assert outcome.error == float("inf")
    assert "DomainError: out of range" in str(outcome)


def test_selfcheck_level():
    with pytest.raises(ValueError):
        run_selfcheck("thorough")


def test_check_outcome():
    outcome = CheckOutcome("mass", 1e-10, 1e-8, 0.5)

    assert outcome.passed
    assert outcome.margin == pytest.approx(100.0)
    assert str(outcome).startswith("PASS mass: error=1e-10 tol=1e-08")
    assert CheckOutcome("exact", 0.0, 1e-8, 0.0).margin == float("inf")


KERNEL_CHECKS = [
    item
    for item in selfcheck.QUICK_CHECKS
    if not item[0].startswith("simulated")
]


@pytest.mark.parametrize(
    "check",
    [check for _, check in KERNEL_CHECKS],
    ids=[name for name, _ in KERNEL_CHECKS],
)
def test_quick_kernel_checks_pass(check):
    error, tolerance = check()

    assert error <= tolerance


@pytest.mark.slow
def test_quick_selfcheck_passes():
    report = run_selfcheck("quick")

    assert report.passed, "\n".join(str(item) for item in report.outcomes)
