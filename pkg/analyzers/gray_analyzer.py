"""
Gray analyzer for deciding linearity of the binary image.
"""
from typing import Any, Dict, Optional

from codes.analysis import GrayImageReport, LeeWeightDistribution, gray_closure_is_linear, gray_linearity
from codes.construction import DefiningSets
from codes.errors import VerificationError
from utils.config import settings
from utils.helpers import format_analyzer_response

from analyzers.base_analyzer import BaseAnalyzer


class GrayAnalyzer(BaseAnalyzer):
    """Analyzer applying the generator-pair membership criterion to φ(C_L)."""

    def __init__(self, **kwargs):
        super().__init__(name="gray", **kwargs)
        self.closure_cap = settings.get_cap(self.config["closure_cap"])

    async def execute(self, input_data: Dict[str, Any]) -> Dict[str, Any]:
        """
        Decide linearity and fill the binary parameters.

        Args:
            input_data (Dict[str, Any]): Input data containing "sets" and optionally
                "distribution" and "cross_check"

        Returns:
            Dict[str, Any]: Envelope with the GrayImageReport under "report"
        """
        sets = input_data.get("sets")
        if sets is None:
            return format_analyzer_response(success=False, error="No defining sets provided")
        distribution = input_data.get("distribution")
        cross_check = input_data.get("cross_check", True)
        return await self._guarded(sets.spec, "report", self._analyze, sets, distribution, cross_check)

    def _analyze(
        self,
        sets: DefiningSets,
        distribution: Optional[LeeWeightDistribution],
        cross_check: bool
    ) -> GrayImageReport:
        """
        Run the membership criterion and, at small n, confirm it by exhaustive closure.

        Args:
            sets (DefiningSets): Code to analyze
            distribution (Optional[LeeWeightDistribution]): Known distribution, if any
            cross_check (bool): Whether to run the closure check when n is small enough

        Returns:
            GrayImageReport: Binary image report
        """
        report = gray_linearity(sets, distribution)
        if cross_check and sets.n <= self.closure_cap:
            closed = gray_closure_is_linear(sets)
            if closed != report.is_linear:
                raise VerificationError(
                    f"membership criterion says linear={report.is_linear}, closure check says {closed}"
                )
        return report
