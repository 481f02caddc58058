"""Joyce decompositions, their hypercomplex structures and checks."""

from .decomposition import (
    JoyceDecomposition,
    JoyceLayer,
    canonical_b_coroots,
    joyce_decompose,
    swap_layers,
)
from .hypercomplex import (
    HypercomplexTriple,
    ParameterMatrix,
    hypercomplex_structure,
    quaternion_relations,
    swap_frame_columns,
)
from .models import (
    MatrixModel,
    QuaternionicModel,
    special_unitary_model,
    symplectic_model,
)
from .verifiers import (
    hyperholomorphic_check,
    verify_bracket_inclusions,
    verify_integrability,
    verify_joyce_relations,
)

__all__ = [
    "HypercomplexTriple",
    "JoyceDecomposition",
    "JoyceLayer",
    "MatrixModel",
    "ParameterMatrix",
    "QuaternionicModel",
    "canonical_b_coroots",
    "hypercomplex_structure",
    "hyperholomorphic_check",
    "joyce_decompose",
    "quaternion_relations",
    "special_unitary_model",
    "swap_frame_columns",
    "swap_layers",
    "symplectic_model",
    "verify_bracket_inclusions",
    "verify_integrability",
    "verify_joyce_relations",
]
