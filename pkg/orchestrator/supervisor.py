"""
Supervisor for orchestrating the analysis pipeline using LangGraph.
"""
import asyncio
from typing import Any, Dict, List, Optional, TypedDict

from langgraph.graph import END, StateGraph
from pydantic import BaseModel, ConfigDict

from analyzers.brute_force_analyzer import BruteForceAnalyzer
from analyzers.closed_form_analyzer import ClosedFormAnalyzer
from analyzers.fast_path_analyzer import FastPathAnalyzer
from analyzers.gray_analyzer import GrayAnalyzer
from codes import errors
from codes.analysis import GrayImageReport, LeeWeightDistribution, quaternary_parameters
from codes.construction import DefiningSets, build_defining_sets, code_length
from codes.errors import CapExceededError, CodeError
from codes.poset import OrderIdealSpec, validate_spec
from orchestrator.report import AnalysisReport, GrayEcho, IdealEcho, Provenance
from utils.config import settings
from utils.logger import setup_logging

logger = setup_logging()


class PipelineError(Exception):
    """An analyzer reported failure; `cause` is the original CodeError class."""

    def __init__(self, message: str, cause: type = CodeError):
        super().__init__(message)
        self.cause = cause


class AnalysisOptions(BaseModel):
    model_config = ConfigDict(frozen=True)

    gray: bool = False
    verify: bool = False
    jobs: int = settings.CONCURRENT_TASKS


class ExecutionPlan(BaseModel):
    model_config = ConfigDict(frozen=True)

    fast_path: bool
    brute_force: bool
    gray: bool

    @property
    def needs_sets(self) -> bool:
        return self.brute_force or self.gray


class PipelineState(TypedDict, total=False):
    spec: OrderIdealSpec
    options: AnalysisOptions
    plan: ExecutionPlan
    sets: Optional[DefiningSets]
    distributions: Dict[str, LeeWeightDistribution]
    agreed: bool
    disagreeing: List[str]
    gray: Optional[GrayImageReport]
    report: AnalysisReport


class Supervisor:
    """Orchestrator for the construct → distribute → cross-check → Gray workflow."""

    def __init__(self, jobs: int = settings.CONCURRENT_TASKS):
        """
        Initialize supervisor.

        Args:
            jobs (int): Default worker count for brute-force enumeration
        """
        self.closed_form = ClosedFormAnalyzer()
        self.fast_path = FastPathAnalyzer()
        self.brute_force = BruteForceAnalyzer(jobs=jobs)
        self.gray = GrayAnalyzer()
        self.graph = self._build_graph()

    def plan(self, spec: OrderIdealSpec, options: AnalysisOptions) -> ExecutionPlan:
        """
        Decide which methods run and enforce every cap before any work starts.

        Args:
            spec (OrderIdealSpec): Spec to analyze
            options (AnalysisOptions): Command options

        Returns:
            ExecutionPlan: Methods to run

        Raises:
            ParameterRangeError: If the OrderIdealSpec is out of range
            CapExceededError: If a requested method is above its cap
            ConstructionError: If D is empty
        """
        validate_spec(spec)
        if code_length(spec) == 0:
            raise errors.ConstructionError(f"D is empty for {spec.describe()}: the code has length 0")

        brute_force = self.brute_force.runs_by_default(spec.n)
        if options.verify:
            if spec.n > settings.BRUTE_FORCE_MAX_N:
                raise CapExceededError(f"--verify needs n <= {settings.BRUTE_FORCE_MAX_N}, got n={spec.n}")
            brute_force = True
        if options.gray and spec.n > settings.MATERIALIZE_MAX_N:
            raise CapExceededError(f"--gray needs n <= {settings.MATERIALIZE_MAX_N}, got n={spec.n}")

        plan = ExecutionPlan(
            fast_path=spec.n <= settings.FAST_PATH_MAX_N,
            brute_force=brute_force,
            gray=options.gray,
        )
        logger.info(f"Planned {spec.describe()}: {plan.model_dump()}")
        return plan

    async def run(self, spec: OrderIdealSpec, options: Optional[AnalysisOptions] = None) -> AnalysisReport:
        """
        Run the full pipeline for one spec.

        Args:
            spec (OrderIdealSpec): Spec to analyze
            options (Optional[AnalysisOptions]): Command options

        Returns:
            AnalysisReport: Assembled report
        """
        options = options or AnalysisOptions()
        plan = self.plan(spec, options)
        final_state = await self.graph.ainvoke({
            "spec": spec,
            "options": options,
            "plan": plan,
            "distributions": {},
        })
        return final_state["report"]

    def _build_graph(self) -> Any:
        """
        Build the workflow graph.

        Returns:
            Any: Compiled LangGraph application
        """
        graph = StateGraph(PipelineState)

        graph.add_node("closed_form", self._closed_form_node)
        graph.add_node("fast_path", self._fast_path_node)
        graph.add_node("construct", self._construct_node)
        graph.add_node("brute_force", self._brute_force_node)
        graph.add_node("cross_check", self._cross_check_node)
        graph.add_node("gray", self._gray_node)
        graph.add_node("report", self._report_node)

        graph.set_entry_point("closed_form")
        graph.add_edge("closed_form", "fast_path")
        graph.add_conditional_edges(
            "fast_path",
            lambda state: "construct" if state["plan"].needs_sets else "cross_check",
            {"construct": "construct", "cross_check": "cross_check"}
        )
        graph.add_conditional_edges(
            "construct",
            lambda state: "brute_force" if state["plan"].brute_force else "cross_check",
            {"brute_force": "brute_force", "cross_check": "cross_check"}
        )
        graph.add_edge("brute_force", "cross_check")
        graph.add_conditional_edges(
            "cross_check",
            lambda state: "gray" if state["plan"].gray else "report",
            {"gray": "gray", "report": "report"}
        )
        graph.add_edge("gray", "report")
        graph.add_edge("report", END)

        return graph.compile()

    @staticmethod
    def _unwrap(response: Dict[str, Any], key: str) -> Any:
        """
        Return the payload of a successful response or raise PipelineError.

        Args:
            response (Dict[str, Any]): Analyzer response envelope
            key (str): Payload key

        Returns:
            Any: Payload
        """
        if not response["success"]:
            cause = getattr(errors, response.get("error_type") or "", CodeError)
            raise PipelineError(response.get("error") or "analyzer failed", cause)
        return response["data"][key]

    def _with_distribution(self, state: PipelineState, method: str, distribution: LeeWeightDistribution) -> Dict[str, Any]:
        distributions = dict(state.get("distributions") or {})
        distributions[method] = distribution
        return {"distributions": distributions}

    async def _closed_form_node(self, state: PipelineState) -> Dict[str, Any]:
        response = await self.closed_form.execute({"spec": state["spec"]})
        return self._with_distribution(state, "closed_form", self._unwrap(response, "distribution"))

    async def _fast_path_node(self, state: PipelineState) -> Dict[str, Any]:
        if not state["plan"].fast_path:
            return {"distributions": dict(state["distributions"])}
        response = await self.fast_path.execute({"spec": state["spec"]})
        return self._with_distribution(state, "fast_path", self._unwrap(response, "distribution"))

    async def _construct_node(self, state: PipelineState) -> Dict[str, Any]:
        try:
            sets = await asyncio.to_thread(build_defining_sets, state["spec"])
        except CodeError as e:
            raise PipelineError(str(e), type(e)) from e
        return {"sets": sets}

    async def _brute_force_node(self, state: PipelineState) -> Dict[str, Any]:
        response = await self.brute_force.execute({"sets": state["sets"], "jobs": state["options"].jobs})
        return self._with_distribution(state, "brute_force", self._unwrap(response, "distribution"))

    async def _cross_check_node(self, state: PipelineState) -> Dict[str, Any]:
        distributions = state["distributions"]
        reference = distributions["closed_form"]
        disagreeing = [
            method for method, distribution in distributions.items()
            if distribution.multiplicity != reference.multiplicity
        ]
        if disagreeing:
            logger.error(f"Distribution disagreement for {state['spec'].describe()}: {disagreeing} vs closed_form")
        return {"agreed": not disagreeing, "disagreeing": disagreeing}

    async def _gray_node(self, state: PipelineState) -> Dict[str, Any]:
        response = await self.gray.execute({
            "sets": state["sets"],
            "distribution": state["distributions"]["closed_form"],
        })
        return {"gray": self._unwrap(response, "report")}

    async def _report_node(self, state: PipelineState) -> Dict[str, Any]:
        spec = state["spec"]
        distribution = state["distributions"]["closed_form"]
        length = code_length(spec)
        gray = state.get("gray")

        report = AnalysisReport(
            n=spec.n,
            m=spec.m,
            ideal=IdealEcho(kind=spec.kind.value, i=spec.i, j=spec.j),
            length=length,
            size=distribution.code_size,
            kernel_size=distribution.kernel_size,
            lee_multiplicity=sorted(distribution.multiplicity.items()),
            lee_distinct=sorted(distribution.distinct.items()),
            quaternary_params=quaternary_parameters(distribution, length),
            gray=None if gray is None else GrayEcho(
                binary_length=gray.binary_length,
                binary_size=gray.binary_size,
                min_distance=gray.min_distance,
                linear=gray.is_linear,
                witness=gray.witness,
            ),
            provenance=Provenance(
                methods=sorted(state["distributions"]),
                agreed=state.get("agreed", True),
                disagreeing=state.get("disagreeing", []),
            ),
        )
        return {"report": report}
