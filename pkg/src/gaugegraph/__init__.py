"""Gauged non-reciprocal ring Hamiltonians and their pure decay modes.

Construct distance-switched directed ring graphs, evaluate their closed-form
decay-mode spectra, confirm everything against a dense complex eigensolver,
and explore gauge-engineered mode selection, double-mode pairing, and
multi-dimensional spectral folding.
"""

from .analysis import (
    DominanceReport,
    PairingReport,
    RotationReport,
    amplitude_profile,
    conjugation_pairing,
    dominance_report,
    gap_sweep,
    rotation_check,
    winding_number,
)
from .analytic import (
    AnalyticMode,
    analytic_eigenvalue,
    analytic_mode_vector,
    closed_form_fcg,
    closed_form_hcs,
    full_analytic_spectrum,
)
from .config import ExperimentConfig, config_from_mapping, config_to_mapping, parse_config
from .errors import ConfigurationError, GaugeGraphError, SolverError, UsageError
from .folding import (
    FoldingReport,
    assemble_dimensions,
    diagonal_labels,
    folded_norm,
    folded_spectrum,
    kronecker_sum,
    multimode_select,
    separable_mode,
    separable_value,
)
from .graphs import (
    DecayValidity,
    GraphSpec,
    Pattern,
    assemble_hamiltonian,
    expand_pattern,
    gauge_diagonal,
    validate_pure_decay,
)
from .solver import (
    EigenPair,
    MatchReport,
    Spectrum,
    eigendecompose,
    match_spectra,
    projector_distance,
    residual,
    subspace_projector,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticMode",
    "ConfigurationError",
    "DecayValidity",
    "DominanceReport",
    "EigenPair",
    "ExperimentConfig",
    "FoldingReport",
    "GaugeGraphError",
    "GraphSpec",
    "MatchReport",
    "PairingReport",
    "Pattern",
    "RotationReport",
    "SolverError",
    "Spectrum",
    "UsageError",
    "amplitude_profile",
    "analytic_eigenvalue",
    "analytic_mode_vector",
    "assemble_dimensions",
    "assemble_hamiltonian",
    "closed_form_fcg",
    "closed_form_hcs",
    "config_from_mapping",
    "config_to_mapping",
    "conjugation_pairing",
    "diagonal_labels",
    "dominance_report",
    "eigendecompose",
    "expand_pattern",
    "folded_norm",
    "folded_spectrum",
    "full_analytic_spectrum",
    "gap_sweep",
    "gauge_diagonal",
    "kronecker_sum",
    "match_spectra",
    "multimode_select",
    "parse_config",
    "projector_distance",
    "residual",
    "rotation_check",
    "separable_mode",
    "separable_value",
    "subspace_projector",
    "validate_pure_decay",
    "winding_number",
]
