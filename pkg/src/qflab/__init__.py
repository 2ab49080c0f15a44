"""Exact computations with relative quadratic maps over finite-dimensional algebras."""

__version__ = "0.1.0"

from .algebra import AlgebraError, AlgebraMorphism, FiniteDimAlgebra, quotient_algebra  # noqa: E402
from .census import (  # noqa: E402
    CensusResult,
    dimension_audit,
    enumerate_quads,
    monomial_ideal_membership,
    squarezero_counterexample_check,
)
from .kaehler import PresentedAlgebra, derivation_check, kaehler_module, w_to_omega  # noqa: E402
from .lab import (  # noqa: E402
    QPhiResult,
    c2_fixed,
    delta_subalgebra,
    epimorphism_check,
    exterior_model_check,
    flatness_comparison,
    frobenius_model,
    i_squared_model,
    q_phi,
    squares_subalgebra,
    tensor_square,
)
from .quadmaps import (  # noqa: E402
    AxiomReport,
    GuardExceeded,
    ModeError,
    QuadraticMapSpec,
    axiom_check,
    derivation_form,
    exotic_form,
    higher_derivative_form,
    polarize,
    resolution_quad,
    split_form,
    universal_cross_map,
)

__all__ = [
    "AlgebraError", "AlgebraMorphism", "FiniteDimAlgebra", "quotient_algebra",
    "CensusResult", "dimension_audit", "enumerate_quads", "monomial_ideal_membership",
    "squarezero_counterexample_check",
    "PresentedAlgebra", "derivation_check", "kaehler_module", "w_to_omega",
    "QPhiResult", "c2_fixed", "delta_subalgebra", "epimorphism_check", "exterior_model_check",
    "flatness_comparison", "frobenius_model", "i_squared_model", "q_phi", "squares_subalgebra", "tensor_square",
    "AxiomReport", "GuardExceeded", "ModeError", "QuadraticMapSpec", "axiom_check", "derivation_form",
    "exotic_form", "higher_derivative_form", "polarize", "resolution_quad", "split_form", "universal_cross_map",
]
