"""
Pinned reproduction cases: worked examples and parameter tables, each recomputed
through the library and compared with its known values.
"""
from collections import Counter
from typing import Awaitable, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from codes.analysis import brute_force_distribution, closed_form_distribution, linearity_targets
from codes.construction import build_D, build_defining_sets, generator_matrix, kernel_and_size
from codes.errors import ConstructionError
from codes.poset import OrderIdealSpec, TwoChainPoset, all_specs, down_set, generating_function_eval
from codes.standard_form import standard_form
from orchestrator.report import AnalysisReport
from orchestrator.supervisor import AnalysisOptions, Supervisor
from utils.logger import setup_logging

logger = setup_logging()

# specs whose code has kernel 2; every other spec with non-empty D has size 4^n
DEGENERATE_KERNELS = {
    OrderIdealSpec.chain_one(2, 2, 2),
    OrderIdealSpec.union(3, 1, 1, 3),
    OrderIdealSpec.union(3, 2, 2, 3),
}
EMPTY_D = {OrderIdealSpec.union(2, 1, 1, 2)}

CHAIN_ONE_N2_I2 = OrderIdealSpec.chain_one(2, 2, 2)
CHAIN_ONE_N3_I1 = OrderIdealSpec.chain_one(3, 3, 1)
CHAIN_ONE_N3_I3 = OrderIdealSpec.chain_one(3, 3, 3)
UNION_N3_M1 = OrderIdealSpec.union(3, 1, 1, 2)
CHAIN_ONE_N2_I1 = OrderIdealSpec.chain_one(2, 2, 1)
CHAIN_ONE_N3_I2 = OrderIdealSpec.chain_one(3, 3, 2)


class CaseResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def _compare(name: str, expected: object, actual: object) -> CaseResult:
    if expected == actual:
        return CaseResult(name=name, passed=True, detail=str(actual))
    return CaseResult(name=name, passed=False, detail=f"expected {expected}, got {actual}")


def _supports(vectors: Sequence) -> List[Tuple[int, ...]]:
    return [tuple(sorted(vector.support)) for vector in vectors]


def _in_column_order(spec: OrderIdealSpec, column_l: Sequence[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    """Distinct codewords with coordinates permuted into the given L order."""
    sets = build_defining_sets(spec)
    position = {tuple(int(x) for x in row): idx for idx, row in enumerate(sets.l_rows)}
    columns = [position[l] for l in column_l]
    report = standard_form(generator_matrix(sets))
    return sorted(tuple(int(x) for x in word[columns]) for word in report.codewords())


class Reproducer:
    """Runs every pinned case through the same code paths as the CLI."""

    def __init__(self, jobs: int = 1):
        self.jobs = jobs
        self.supervisor = Supervisor(jobs=jobs)
        self._reports: Dict[OrderIdealSpec, AnalysisReport] = {}

    async def report(self, spec: OrderIdealSpec) -> AnalysisReport:
        if spec not in self._reports:
            options = AnalysisOptions(gray=True, verify=True, jobs=self.jobs)
            self._reports[spec] = await self.supervisor.run(spec, options)
        return self._reports[spec]

    def cases(self) -> List[Tuple[str, Callable[[], Awaitable[CaseResult]]]]:
        return [
            ("down-sets", self.down_sets),
            ("generating-function-values", self.generating_function_values),
            ("chain-one-n2-i2", self.chain_one_n2_i2),
            ("chain-one-n2-i2-codewords", self.chain_one_n2_i2_codewords),
            ("chain-one-n3-i1", self.chain_one_n3_i1),
            ("chain-one-n3-i3", self.chain_one_n3_i3),
            ("union-n3-m1", self.union_n3_m1),
            ("kernel-chain-one-n2-i2", self.kernel_chain_one_n2_i2),
            ("degenerate-kernels", self.degenerate_kernels),
            ("gray-chain-one-n2-i2", self.gray_chain_one_n2_i2),
            ("gray-chain-one-n2-i1", self.gray_chain_one_n2_i1),
            ("gray-chain-one-n3-i2", self.gray_chain_one_n3_i2),
            ("gray-chain-one-n3-i1", self.gray_chain_one_n3_i1),
            ("gray-chain-one-n3-i3", self.gray_chain_one_n3_i3),
            ("gray-union-n3-m1", self.gray_union_n3_m1),
            ("quaternary-parameters", self.quaternary_parameter_table),
            ("binary-parameters", self.binary_parameter_table),
            ("closed-form-sweep", self.closed_form_sweep),
        ]

    async def run(self) -> List[CaseResult]:
        results = []
        for name, case in self.cases():
            try:
                result = await case()
            except Exception as e:
                logger.error(f"Case {name} raised: {str(e)}")
                result = CaseResult(name=name, passed=False, detail=f"raised {type(e).__name__}: {e}")
            results.append(result.model_copy(update={"name": name}))
        return results

    async def down_sets(self) -> CaseResult:
        actual = [
            _supports(down_set(OrderIdealSpec.chain_one(6, 4, 4)).members),
            _supports(down_set(OrderIdealSpec.chain_two(6, 4, 6)).members),
            sorted(_supports(down_set(OrderIdealSpec.union(6, 4, 2, 5)).members)),
        ]
        expected = [
            [(), (1,), (1, 2), (1, 2, 3), (1, 2, 3, 4)],
            [(), (5,), (5, 6)],
            sorted([(), (1,), (1, 2), (5,), (1, 5), (1, 2, 5)]),
        ]
        return _compare("", expected, actual)

    async def generating_function_values(self) -> CaseResult:
        specs = [
            OrderIdealSpec.chain_one(6, 4, 4),
            OrderIdealSpec.chain_two(6, 4, 6),
            OrderIdealSpec.union(6, 4, 2, 5),
        ]
        actual = [generating_function_eval(down_set(spec).members, [1] * 6) for spec in specs]
        actual.append(generating_function_eval(down_set(specs[2]).members, [-1, 1, 1, 1, -1, 1]))
        return _compare("", [5, 3, 6, 0], actual)

    async def chain_one_n2_i2(self) -> CaseResult:
        report = await self.report(CHAIN_ONE_N2_I2)
        actual = {
            "D": [vector.bits for vector in build_D(CHAIN_ONE_N2_I2)],
            "L": sorted(tuple(l.symbols) for l in build_defining_sets(CHAIN_ONE_N2_I2).L),
            "size": report.size,
            "distinct": dict(report.lee_distinct),
            "params": report.quaternary_params,
        }
        expected = {
            "D": [(0, 1)],
            "L": sorted([(0, 1), (0, 3), (2, 1), (2, 3)]),
            "size": 8,
            "distinct": {0: 1, 4: 6, 8: 1},
            "params": (4, 8, 4),
        }
        return _compare("", expected, actual)

    async def chain_one_n2_i2_codewords(self) -> CaseResult:
        expected = sorted([
            (0, 0, 0, 0), (0, 0, 2, 2), (2, 2, 0, 0), (2, 2, 2, 2),
            (1, 3, 3, 1), (3, 1, 3, 1), (1, 3, 1, 3), (3, 1, 1, 3),
        ])
        actual = _in_column_order(CHAIN_ONE_N2_I2, [(0, 1), (0, 3), (2, 1), (2, 3)])
        return _compare("", expected, actual)

    async def _parameters_case(
        self,
        spec: OrderIdealSpec,
        d_set: Optional[List[Tuple[int, ...]]],
        distinct: Dict[int, int],
        params: Tuple[int, int, int]
    ) -> CaseResult:
        report = await self.report(spec)
        actual = {"distinct": dict(report.lee_distinct), "params": report.quaternary_params}
        expected = {"distinct": distinct, "params": params}
        if d_set is not None:
            actual["D"] = sorted(vector.bits for vector in build_D(spec))
            expected["D"] = sorted(d_set)
        return _compare("", expected, actual)

    async def chain_one_n3_i1(self) -> CaseResult:
        d_set = [(0, 1, 0), (0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1)]
        return await self._parameters_case(CHAIN_ONE_N3_I1, d_set, {0: 1, 48: 60, 64: 3}, (48, 64, 48))

    async def chain_one_n3_i3(self) -> CaseResult:
        d_set = [(0, 1, 0), (0, 0, 1), (0, 1, 1), (1, 0, 1)]
        return await self._parameters_case(CHAIN_ONE_N3_I3, d_set, {0: 1, 16: 1, 32: 59, 48: 3}, (32, 64, 16))

    async def union_n3_m1(self) -> CaseResult:
        d_set = [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]
        return await self._parameters_case(UNION_N3_M1, d_set, {0: 1, 32: 62, 64: 1}, (32, 64, 32))

    async def kernel_chain_one_n2_i2(self) -> CaseResult:
        sets = build_defining_sets(CHAIN_ONE_N2_I2)
        return _compare("", (2, 8), kernel_and_size(sets))

    async def degenerate_kernels(self) -> CaseResult:
        """Kernel sizes of every spec with n <= 4, from enumeration."""
        unexpected = []
        for n in range(2, 5):
            for m in range(1, n + 1):
                for spec in all_specs(TwoChainPoset(n=n, m=m)):
                    if spec in EMPTY_D:
                        continue
                    kernel, size = kernel_and_size(build_defining_sets(spec))
                    expected = 2 if spec in DEGENERATE_KERNELS else 1
                    if kernel != expected or size * kernel != 4 ** n:
                        unexpected.append(f"{spec.describe()}: kernel {kernel}")
        if unexpected:
            return CaseResult(name="", passed=False, detail="; ".join(unexpected))
        return CaseResult(name="", passed=True, detail=f"kernel 2 exactly for {sorted(s.describe() for s in DEGENERATE_KERNELS)}")

    async def _gray_case(
        self,
        spec: OrderIdealSpec,
        linear: bool,
        binary: Tuple[int, int, int],
        witness: Optional[Tuple[int, int]]
    ) -> CaseResult:
        gray = (await self.report(spec)).gray
        actual = (gray.linear, (gray.binary_length, gray.binary_size, gray.min_distance), gray.witness)
        return _compare("", (linear, binary, witness), actual)

    async def gray_chain_one_n2_i2(self) -> CaseResult:
        return await self._gray_case(CHAIN_ONE_N2_I2, True, (8, 8, 4), None)

    async def gray_chain_one_n2_i1(self) -> CaseResult:
        result = await self._gray_case(CHAIN_ONE_N2_I1, True, (16, 16, 8), None)
        if not result.passed:
            return result
        sets = build_defining_sets(CHAIN_ONE_N2_I1)
        _, _, target = next(t for t in linearity_targets(sets) if t[:2] == (1, 2))
        message = standard_form(generator_matrix(sets)).solve(target)
        # the (1,2) product is c_{(2,0)}; the code has trivial kernel so the message is unique
        return _compare("", [2, 0], None if message is None else message.tolist())

    async def gray_chain_one_n3_i2(self) -> CaseResult:
        return await self._gray_case(CHAIN_ONE_N3_I2, False, (80, 64, 32), (1, 2))

    async def gray_chain_one_n3_i1(self) -> CaseResult:
        return await self._gray_case(CHAIN_ONE_N3_I1, False, (96, 64, 48), (1, 2))

    async def gray_chain_one_n3_i3(self) -> CaseResult:
        return await self._gray_case(CHAIN_ONE_N3_I3, False, (64, 64, 16), (2, 3))

    async def gray_union_n3_m1(self) -> CaseResult:
        return await self._gray_case(UNION_N3_M1, False, (64, 64, 32), (1, 2))

    async def quaternary_parameter_table(self) -> CaseResult:
        specs = [CHAIN_ONE_N2_I2, CHAIN_ONE_N3_I3, UNION_N3_M1, CHAIN_ONE_N3_I1]
        actual = [(await self.report(spec)).quaternary_params for spec in specs]
        return _compare("", [(4, 8, 4), (32, 64, 16), (32, 64, 32), (48, 64, 48)], actual)

    async def binary_parameter_table(self) -> CaseResult:
        rows = []
        for spec in [CHAIN_ONE_N2_I2, CHAIN_ONE_N2_I1, CHAIN_ONE_N3_I3, UNION_N3_M1, CHAIN_ONE_N3_I2, CHAIN_ONE_N3_I1]:
            gray = (await self.report(spec)).gray
            dimension = gray.binary_size.bit_length() - 1
            rows.append((gray.binary_length, dimension, gray.min_distance, "Linear" if gray.linear else "Nonlinear"))
        expected = [
            (8, 3, 4, "Linear"),
            (16, 4, 8, "Linear"),
            (64, 6, 16, "Nonlinear"),
            (64, 6, 32, "Nonlinear"),
            (80, 6, 32, "Nonlinear"),
            (96, 6, 48, "Nonlinear"),
        ]
        return _compare("", expected, rows)

    async def closed_form_sweep(self) -> CaseResult:
        """Closed form against brute force for every spec with n <= 4."""
        mismatches = []
        checked = 0
        for n in range(2, 5):
            for m in range(1, n + 1):
                for spec in all_specs(TwoChainPoset(n=n, m=m)):
                    try:
                        closed = closed_form_distribution(spec)
                    except ConstructionError:
                        if spec not in EMPTY_D:
                            mismatches.append(f"{spec.describe()}: unexpected empty D")
                        continue
                    brute = brute_force_distribution(build_defining_sets(spec), jobs=self.jobs)
                    checked += 1
                    if closed.multiplicity != brute.multiplicity:
                        mismatches.append(f"{spec.describe()}: {closed.multiplicity} != {brute.multiplicity}")
        if mismatches:
            return CaseResult(name="", passed=False, detail="; ".join(mismatches))
        return CaseResult(name="", passed=True, detail=f"{checked} specs agree")


async def run_cases(jobs: int = 1) -> List[CaseResult]:
    return await Reproducer(jobs=jobs).run()


def tally(results: Sequence[CaseResult]) -> Counter:
    """Counter keyed by True (passed) and False (failed)."""
    return Counter(result.passed for result in results)
