"""The Obata connection, its curvature and its holonomy algebra."""

from .blocks import BlockReport, block_report, trace_check
from .connection import (
    Connection,
    connection_form,
    euler_field,
    obata_connection,
    verify_euler_field,
    verify_nabla_e1,
    verify_parallel_structures,
    verify_torsion_free,
)
from .curvature import (
    CurvatureTensor,
    EndomorphismTensor,
    covariant_derivative,
    curvature,
    verify_bianchi,
)
from .holonomy import HolonomyResult, holonomy_algebra, is_lie_closed
from .subspaces import (
    InvariantSubspace,
    ParallelSubspaceReport,
    find_parallel_subspaces,
    is_block_lower_triangular,
    verify_reduction_consistency,
)

__all__ = [
    "BlockReport",
    "Connection",
    "CurvatureTensor",
    "EndomorphismTensor",
    "HolonomyResult",
    "InvariantSubspace",
    "ParallelSubspaceReport",
    "block_report",
    "connection_form",
    "covariant_derivative",
    "curvature",
    "euler_field",
    "find_parallel_subspaces",
    "holonomy_algebra",
    "is_block_lower_triangular",
    "is_lie_closed",
    "obata_connection",
    "trace_check",
    "verify_bianchi",
    "verify_euler_field",
    "verify_nabla_e1",
    "verify_parallel_structures",
    "verify_reduction_consistency",
    "verify_torsion_free",
]
