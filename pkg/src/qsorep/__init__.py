"""Gelfand-Tsetlin representations of the nonstandard q-deformed so_n algebras.

Construct the finite-dimensional irreducible representations of U_q(so_n) in
the q-analogue of the Gelfand-Tsetlin basis, and verify the algebra's
defining relations, the star property, irreducibility and the exact bracket
sum rule behind the action formulas.
"""

from .qnum import (
    CLASSICAL,
    EXACT,
    FLOAT,
    HalfInt,
    QMode,
    QScalar,
    RootOfUnityWarning,
    balanced_bracket,
    q_number,
    q_two,
)
from .gtbasis import (
    GTPattern,
    LRow,
    Signature,
    branch,
    dimension,
    enumerate_patterns,
    l_coords,
    pattern_index,
    validate_signature,
)
from .repmatrix import (
    GeneratorMatrix,
    RepBundle,
    UnsupportedModeError,
    build_rep,
    d_squared,
    even_diag_element,
    even_step_amplitude,
    even_step_numerator,
    even_step_squared,
    generator_matrix,
    odd_step_amplitude,
    odd_step_numerator,
    odd_step_squared,
)
from .algebra_check import (
    IndeterminateCommutant,
    ResidualReport,
    commutant_dimension,
    commutant_dimension_matrices,
    commutation_residual,
    relation_suite,
    star_residual,
    trilinear_residual,
)
from .sum_rule import (
    LadderConfig,
    SweepReport,
    bracket_pair,
    identity_sweep,
    transition_weight,
    weight_sum,
)

__version__ = "0.1.0"

__all__ = [
    "CLASSICAL",
    "EXACT",
    "FLOAT",
    "GTPattern",
    "GeneratorMatrix",
    "HalfInt",
    "IndeterminateCommutant",
    "LRow",
    "LadderConfig",
    "QMode",
    "QScalar",
    "RepBundle",
    "ResidualReport",
    "RootOfUnityWarning",
    "Signature",
    "SweepReport",
    "UnsupportedModeError",
    "balanced_bracket",
    "bracket_pair",
    "branch",
    "build_rep",
    "commutant_dimension",
    "commutant_dimension_matrices",
    "commutation_residual",
    "d_squared",
    "dimension",
    "enumerate_patterns",
    "even_diag_element",
    "even_step_amplitude",
    "even_step_numerator",
    "even_step_squared",
    "generator_matrix",
    "identity_sweep",
    "l_coords",
    "odd_step_amplitude",
    "odd_step_numerator",
    "odd_step_squared",
    "pattern_index",
    "q_number",
    "q_two",
    "relation_suite",
    "star_residual",
    "transition_weight",
    "trilinear_residual",
    "validate_signature",
    "weight_sum",
]
