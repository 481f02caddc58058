"""obatalab package entry point."""

from .catalog import (
    GroupSpec,
    connection_for,
    decomposition_for,
    realize,
    structure_for,
)
from .constants import REPORT_SCHEMA, TOOL_VERSION
from .exceptions import ObataLabError
from .obata.holonomy import HolonomyResult, holonomy_algebra
from .types import CheckFailure, VerifyResult

__version__ = TOOL_VERSION

__all__ = [
    "CheckFailure",
    "GroupSpec",
    "HolonomyResult",
    "ObataLabError",
    "REPORT_SCHEMA",
    "TOOL_VERSION",
    "VerifyResult",
    "__version__",
    "connection_for",
    "decomposition_for",
    "holonomy_algebra",
    "realize",
    "structure_for",
]
