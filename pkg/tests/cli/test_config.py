from pathlib import Path

import pytest

from shotnoise.cli import (
    FIGURES,
    ExperimentConfig,
    GridSpec,
    figure_preset,
    read_config_file,
)
from shotnoise.exceptions import ConfigurationError


def test_grid_parse():
    grid = GridSpec.parse("0:6:301")

    assert grid == GridSpec(0.0, 6.0, 301)
    assert grid.step == pytest.approx(0.02)
    assert str(grid) == "0:6:301"
    assert len(grid.points()) == 301
    assert grid.evaluation_grid().regimes[-1] == "tail"


@pytest.mark.parametrize("text", ["0:6", "a:6:10", "6:0:10", "0:6:1"])
def test_grid_parse_rejects(text):
    with pytest.raises(ConfigurationError):
        GridSpec.parse(text)


def test_read_config_file(tmp_path: Path):
    path = tmp_path / "run.cfg"
    path.write_text(
        "# compare run\n\nspec = gamma:1+det\nblock-size=1000\nseed=4\n"
    )

    assert read_config_file(path) == {
        "spec": "gamma:1+det",
        "block_size": "1000",
        "seed": "4",
    }


def test_read_config_file_errors(tmp_path: Path):
    path = tmp_path / "broken.cfg"
    path.write_text("samples 100\n")

    with pytest.raises(ConfigurationError, match="broken.cfg:1"):
        read_config_file(path)
    with pytest.raises(ConfigurationError):
        read_config_file(tmp_path / "missing.cfg")


def test_defaults(monkeypatch):
    monkeypatch.delenv("SHOTNOISE_WORKERS", raising=False)
    config = ExperimentConfig.from_options({})

    assert str(config.spec) == "fixed:1+det"
    assert config.grid == GridSpec(0.0, 6.0, 61)
    assert config.chain.n_samples == 100_000
    assert config.chain.n_workers == 1
    assert config.out is None
    assert config.quantity == "both"


def test_options_are_typed():
    config = ExperimentConfig.from_options(
        {
            "spec": "gamma:1+gamma:2",
            "samples": "500",
            "steps": 30,
            "seed": "9",
            "workers": "2",
            "out": "table.csv",
            "grid": "0:2:5",
        }
    )

    assert str(config.spec) == "gamma:1+gamma:2"
    assert config.chain.n_samples == 500
    assert config.chain.n_steps == 30
    assert config.chain.master_seed == 9
    assert config.chain.n_workers == 2
    assert config.out == Path("table.csv")
    assert config.grid == GridSpec(0.0, 2.0, 5)


def test_exponent_and_amplitude_override_spec():
    config = ExperimentConfig.from_options(
        {"spec": "gamma:1+det", "amplitude": "laplace:1"}
    )

    assert str(config.spec) == "gamma:1+laplace:1"


def test_figure_preset_and_overrides():
    preset = ExperimentConfig.from_options({"figure": "7"})

    assert preset.figure == 7
    assert str(preset.spec) == "gamma:1+laplace:1"
    assert preset.quantity == "cdf"
    assert "variable: |U|" in preset.header()
    assert preset.header()[0] == "figure: 7"

    overridden = ExperimentConfig.from_options(
        {"figure": 7, "quantity": "density", "grid": "0:3:31"}
    )

    assert overridden.quantity == "density"
    assert overridden.grid == GridSpec(0.0, 3.0, 31)


@pytest.mark.parametrize(
    "options",
    [
        {"figure": "seven"},
        {"figure": 12},
        {"samples": "many"},
        {"samples": 0},
        {"quantity": "mean"},
        {"spec": "gamma:1"},
    ],
)
def test_invalid_options(options):
    with pytest.raises(ConfigurationError):
        ExperimentConfig.from_options(options)


def test_presets():
    assert sorted(FIGURES) == list(range(1, 10))
    assert all(
        str(preset.spec.exponent) == "gamma:1" for preset in FIGURES.values()
    )
    assert figure_preset(1).quantity == "density"

    with pytest.raises(ConfigurationError):
        figure_preset(0)
