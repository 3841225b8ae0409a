"""Command-line front end: experiments, comparison tables and checks."""

from .config import ExperimentConfig, GridSpec, read_config_file
from .figures import FIGURES, FigurePreset, figure_preset
from .main import build_parser, main, run_compare, run_simulate
from .output import ComparisonRow, read_samples, write_comparison
from .selfcheck import CheckOutcome, SelfCheckReport, run_selfcheck
