"""
Closed-form analyzer: Lee weight distribution from the weight tables.
"""
from typing import Any, Dict

from codes.analysis import closed_form_distribution
from utils.helpers import format_analyzer_response

from analyzers.base_analyzer import BaseAnalyzer


class ClosedFormAnalyzer(BaseAnalyzer):
    """Analyzer evaluating the weight tables; needs no codeword."""

    def __init__(self, **kwargs):
        super().__init__(name="closed_form", **kwargs)

    async def execute(self, input_data: Dict[str, Any]) -> Dict[str, Any]:
        """
        Compute the closed-form distribution.

        Args:
            input_data (Dict[str, Any]): Input data containing "spec"

        Returns:
            Dict[str, Any]: Envelope with the distribution under "distribution"
        """
        spec = input_data.get("spec")
        if spec is None:
            return format_analyzer_response(success=False, error="No spec provided")
        return await self._guarded(spec, "distribution", closed_form_distribution, spec)
