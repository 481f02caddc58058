"""Lemma suite exports."""

from .base import LemmaCheck, SuiteContext
from .checks import CHECK_NAMES, FunctionCheck, build_check, default_checks
from .suite import SuiteResult, context_for, run_lemma_suite

__all__ = [
    "CHECK_NAMES",
    "FunctionCheck",
    "LemmaCheck",
    "SuiteContext",
    "SuiteResult",
    "build_check",
    "context_for",
    "default_checks",
    "run_lemma_suite",
]
