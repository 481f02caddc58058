"""Human-readable tables and versioned JSON reports."""

from .manager import DEFAULT_TEMPLATE_DIR, ReportRenderer
from .report import RunReport

__all__ = ["DEFAULT_TEMPLATE_DIR", "ReportRenderer", "RunReport"]
