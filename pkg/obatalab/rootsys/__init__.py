"""Root systems, Chevalley compact forms and the diagram-level reduction."""

from .cartan import cartan_matrix, squared_lengths, validate_type
from .chevalley import (
    ChevalleyRealization,
    StructureConstantTable,
    chevalley_compact_form,
)
from .diagram import (
    DiagramDecomposition,
    ReductionStep,
    diagram_joyce_decomposition,
    wolf_quaternionic_dim,
)
from .roots import Root, RootSystem, build_root_system, maximal_root
from .tables import (
    TableRow,
    closed_form_trivial_count,
    expected_torus_dim,
    root_type_for_group,
    table1,
)

__all__ = [
    "ChevalleyRealization",
    "DiagramDecomposition",
    "ReductionStep",
    "Root",
    "RootSystem",
    "StructureConstantTable",
    "TableRow",
    "build_root_system",
    "cartan_matrix",
    "chevalley_compact_form",
    "closed_form_trivial_count",
    "diagram_joyce_decomposition",
    "expected_torus_dim",
    "maximal_root",
    "root_type_for_group",
    "squared_lengths",
    "table1",
    "validate_type",
    "wolf_quaternionic_dim",
]
