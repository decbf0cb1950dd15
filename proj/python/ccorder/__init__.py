"""Joint order and correlation-count estimation for two-channel data.

Thin Python layer over the compiled core: canonical-correlation spectra,
max-min and full-dimension detectors, chi-square helpers, synthetic data
generation, and the Monte Carlo harness. Configuration crosses the boundary
as JSON (text or dict) using the same strict schema as the CLI.
"""

from ._ccorder import (
    ArgumentError,
    CanonicalSpectrum,
    ComputationError,
    bartlett_lawley,
    canonical_correlations,
    chi2_cdf,
    chi2_quantile,
    detect,
    generate,
    glrt_lambda,
    ht_threshold,
    mdl_ic,
    mdl_threshold,
    min_step_ht,
    min_step_mdl_ic,
    min_step_mdl_threshold,
    preset,
    preset_names,
    reduced_canonical_correlations,
    run_experiment,
)

__all__ = [
    "ArgumentError",
    "CanonicalSpectrum",
    "ComputationError",
    "bartlett_lawley",
    "canonical_correlations",
    "chi2_cdf",
    "chi2_quantile",
    "detect",
    "generate",
    "glrt_lambda",
    "ht_threshold",
    "mdl_ic",
    "mdl_threshold",
    "min_step_ht",
    "min_step_mdl_ic",
    "min_step_mdl_threshold",
    "preset",
    "preset_names",
    "reduced_canonical_correlations",
    "run_experiment",
]

__version__ = "1.0.0"
