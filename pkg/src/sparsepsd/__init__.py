"""Block-sparse, smooth PSD estimation from mixtures of realizations."""

from .core import (
    FrequencyGrid,
    ObservationSet,
    PsdEstimate,
    RadarParams,
    Scenario,
    SigmaField,
    SolverConfig,
    SpectralCoefficients,
    SynthesisKind,
    make_frequency_grid,
    steering_matrix,
    steering_vector,
)

__version__ = "0.1.0"

__all__ = [
    "FrequencyGrid",
    "ObservationSet",
    "PsdEstimate",
    "RadarParams",
    "Scenario",
    "SigmaField",
    "SolverConfig",
    "SpectralCoefficients",
    "SynthesisKind",
    "make_frequency_grid",
    "steering_matrix",
    "steering_vector",
    "__version__",
]
