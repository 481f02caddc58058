"""Lemma check interface and the pipeline context the checks read from."""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Optional

from obatalab.joyce.decomposition import JoyceDecomposition
from obatalab.joyce.hypercomplex import HypercomplexTriple
from obatalab.obata.connection import Connection
from obatalab.obata.curvature import CurvatureTensor, curvature
from obatalab.types import VerifyResult


@dataclass
class SuiteContext:
    """One constructed example: decomposition, structure and connection.

    The curvature tensor is computed on first use and shared by the
    checks that need it.
    """

    decomposition: JoyceDecomposition
    triple: HypercomplexTriple
    connection: Connection
    _curvature: Optional[CurvatureTensor] = field(default=None, repr=False)

    @property
    def curvature(self) -> CurvatureTensor:
        if self._curvature is None:
            self._curvature = curvature(self.connection)
        return self._curvature


class LemmaCheck(ABC):
    """A named exact identity evaluated on a :class:`SuiteContext`."""

    name: str = ""

    @abstractmethod
    def run(self, ctx: SuiteContext) -> VerifyResult:
        """Evaluate the identity and report every violation."""
