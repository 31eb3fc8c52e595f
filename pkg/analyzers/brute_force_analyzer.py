"""
Brute-force analyzer: evaluates every codeword, partitioned across worker processes.
"""
from typing import Any, Dict

from codes.analysis import brute_force_distribution
from utils.config import settings
from utils.helpers import format_analyzer_response

from analyzers.base_analyzer import BaseAnalyzer


class BruteForceAnalyzer(BaseAnalyzer):
    """Analyzer serving as the exhaustive oracle."""

    def __init__(self, jobs: int = settings.CONCURRENT_TASKS, **kwargs):
        """
        Initialize Brute Force Analyzer.

        Args:
            jobs (int): Number of worker processes over the message space
            **kwargs: Additional arguments for BaseAnalyzer
        """
        super().__init__(name="brute_force", **kwargs)
        self.jobs = max(1, jobs)
        self.auto_cap = settings.get_cap(self.config["auto_cap"])

    def runs_by_default(self, n: int) -> bool:
        return n <= self.auto_cap

    async def execute(self, input_data: Dict[str, Any]) -> Dict[str, Any]:
        """
        Enumerate all 4^n messages.

        Args:
            input_data (Dict[str, Any]): Input data containing "sets" and optionally "jobs"

        Returns:
            Dict[str, Any]: Envelope with the distribution under "distribution"
        """
        sets = input_data.get("sets")
        if sets is None:
            return format_analyzer_response(success=False, error="No defining sets provided")
        jobs = input_data.get("jobs", self.jobs)
        return await self._guarded(sets.spec, "distribution", brute_force_distribution, sets, jobs=jobs)
