"""Presets of the nine simulation-versus-formula comparisons.

All use a Gamma(1) exponent; they differ by amplitude law and by whether
the density or the distribution function is compared.
"""

from dataclasses import dataclass

from shotnoise.exceptions import ConfigurationError
from shotnoise.laws import LawSpec


@dataclass(frozen=True)
class FigurePreset:
    """Class defining one comparison preset.

    Attributes
    ----------
    figure : int
        The preset number, 1..9.
    spec : laws.LawSpec
        The exponent and amplitude laws.
    quantity : str
        'density' or 'cdf'.
    grid : str
        The grid as 'min:max:n_points'.
    caption : str
        What the comparison shows.

    """

    figure: int
    spec: LawSpec
    quantity: str
    grid: str
    caption: str


def _preset(
    figure: int, amplitude: str, quantity: str, caption: str
) -> FigurePreset:
    return FigurePreset(
        figure,
        LawSpec.parse("gamma:1", amplitude),
        quantity,
        "0:6:61",
        caption,
    )


FIGURES: dict[int, FigurePreset] = {
    preset.figure: preset
    for preset in (
        _preset(1, "det", "density", "unit amplitudes, density"),
        _preset(2, "det", "cdf", "unit amplitudes, distribution function"),
        _preset(3, "gamma:1", "density", "exponential amplitudes, density"),
        _preset(
            4,
            "gamma:1",
            "cdf",
            "exponential amplitudes, distribution function",
        ),
        _preset(5, "gamma:0.5", "density", "Gamma(1/2) amplitudes, density"),
        _preset(
            6, "laplace:1", "density", "Laplace amplitudes, density of |U|"
        ),
        _preset(7, "laplace:1", "cdf", "Laplace amplitudes, CDF of |U|"),
        _preset(8, "laplace:2", "cdf", "Laplace(2) amplitudes, CDF of |U|"),
        _preset(
            9, "laplace:0.5", "cdf", "Laplace(1/2) amplitudes, CDF of |U|"
        ),
    )
}


def figure_preset(figure: int) -> FigurePreset:
    """Get a comparison preset.

    Parameters
    ----------
    figure : int
        The preset number, 1..9.

    Returns
    -------
    FigurePreset

    Raises
    ------
    ConfigurationError
        If there is no such preset.

    """
    try:
        return FIGURES[figure]

    except KeyError as err:
        raise ConfigurationError(
            f"Figure must lie in 1..{len(FIGURES)}, got {figure}."
        ) from err
