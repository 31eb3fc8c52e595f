"""
Base analyzer class for the Z4 two-chain poset code toolkit.
"""
import asyncio
from abc import ABC, abstractmethod
from typing import Any, Callable, Dict, Optional

from codes.errors import CapExceededError, CodeError
from codes.poset import OrderIdealSpec
from utils.config import settings
from utils.helpers import format_analyzer_response
from utils.logger import setup_logging

logger = setup_logging()


class BaseAnalyzer(ABC):
    """Abstract base class for all analyzers in the pipeline."""

    def __init__(self, name: str, config: Optional[Dict[str, Any]] = None):
        """
        Initialize base analyzer.

        Args:
            name (str): Analyzer name
            config (Optional[Dict[str, Any]]): Overrides for the settings-derived configuration
        """
        self.name = name
        self.config = {**settings.get_analyzer_config(name), **(config or {})}
        self.cap = settings.get_cap(self.config["cap"]) if "cap" in self.config else None

        logger.info(f"Initialized {name} analyzer (cap n <= {self.cap})")

    @abstractmethod
    async def execute(self, input_data: Dict[str, Any]) -> Dict[str, Any]:
        """
        Execute the analyzer's computation.

        Args:
            input_data (Dict[str, Any]): Input data for the analyzer

        Returns:
            Dict[str, Any]: Response envelope
        """
        pass

    def check_cap(self, spec: OrderIdealSpec) -> None:
        """
        Raise if n is above this analyzer's dimension cap.

        Args:
            spec (OrderIdealSpec): Spec to check

        Raises:
            CapExceededError: If n is above the cap
        """
        if self.cap is not None and spec.n > self.cap:
            raise CapExceededError(f"{self.name}: n={spec.n} exceeds cap {self.cap}")

    async def _run_blocking(self, fn: Callable[..., Any], *args: Any, **kwargs: Any) -> Any:
        """
        Run CPU-bound work off the event loop.

        Args:
            fn (Callable[..., Any]): Function to run
            *args: Positional arguments for fn
            **kwargs: Keyword arguments for fn

        Returns:
            Any: Return value of fn
        """
        return await asyncio.to_thread(fn, *args, **kwargs)

    async def _guarded(self, spec: OrderIdealSpec, key: str, fn: Callable[..., Any], *args: Any, **kwargs: Any) -> Dict[str, Any]:
        """
        Run fn and wrap its result (or its CodeError) in the response envelope.

        Args:
            spec (OrderIdealSpec): Spec being analyzed, for logging
            key (str): Key under which the result is stored in the response data
            fn (Callable[..., Any]): Computation
            *args: Positional arguments for fn
            **kwargs: Keyword arguments for fn

        Returns:
            Dict[str, Any]: Response envelope
        """
        try:
            self.check_cap(spec)
            result = await self._run_blocking(fn, *args, **kwargs)
            logger.info(f"{self.name} finished for {spec.describe()}")
            return format_analyzer_response(
                success=True,
                data={key: result, "method": self.name}
            )
        except CodeError as e:
            logger.error(f"{self.name} failed for {spec.describe()}: {str(e)}")
            return format_analyzer_response(
                success=False,
                error=f"{self.name} failed: {str(e)}",
                error_type=type(e).__name__
            )
