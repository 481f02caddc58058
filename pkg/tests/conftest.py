"""Expose the project root on sys.path and share the small examples."""

from __future__ import annotations

import sys

from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from obatalab.catalog import GroupSpec  # noqa: E402
from obatalab.verification import SuiteContext, context_for  # noqa: E402


@pytest.fixture(scope="session")
def sp2() -> GroupSpec:
    """T^2 x Sp(2), the 12-dimensional worked example."""

    return GroupSpec.parse("sp", 2)


@pytest.fixture(scope="session")
def hopf() -> GroupSpec:
    return GroupSpec.parse("hopf")


@pytest.fixture(scope="session")
def su3() -> GroupSpec:
    return GroupSpec.parse("su", 3)


@pytest.fixture(scope="session")
def su5() -> GroupSpec:
    return GroupSpec.parse("su", 5)


@pytest.fixture(scope="session")
def so7() -> GroupSpec:
    """SO(7): Joyce structure with no b summands."""

    return GroupSpec.parse("so", 7)


@pytest.fixture(scope="session")
def sp2_ctx(sp2: GroupSpec) -> SuiteContext:
    return context_for(sp2)


@pytest.fixture(scope="session")
def hopf_ctx(hopf: GroupSpec) -> SuiteContext:
    return context_for(hopf)


@pytest.fixture(scope="session")
def su3_ctx(su3: GroupSpec) -> SuiteContext:
    return context_for(su3)


@pytest.fixture(scope="session")
def so7_ctx(so7: GroupSpec) -> SuiteContext:
    return context_for(so7)
