"""
Fast-path analyzer: Lee weights from the 2-adic split of each message.
"""
from typing import Any, Dict

from codes.analysis import fast_path_distribution
from utils.helpers import format_analyzer_response

from analyzers.base_analyzer import BaseAnalyzer


class FastPathAnalyzer(BaseAnalyzer):
    """Analyzer sweeping β over F_2^n with the character-sum weight."""

    def __init__(self, **kwargs):
        super().__init__(name="fast_path", **kwargs)

    async def execute(self, input_data: Dict[str, Any]) -> Dict[str, Any]:
        spec = input_data.get("spec")
        if spec is None:
            return format_analyzer_response(success=False, error="No spec provided")
        return await self._guarded(spec, "distribution", fast_path_distribution, spec)
