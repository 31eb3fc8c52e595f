"""
Lee weight distributions of C_L by three independent routes, and the Gray image.

- brute force: evaluate every codeword (the oracle);
- fast path: w_L(c_a) from the 2-adic split a = α + 2β alone: |L| when α ≠ 0,
  otherwise |L| + 2^n·H_{I(P)}((-1)^β), no codeword materialized;
- closed form: the weight/frequency tables indexed by the even-prefix counts (s, t).
"""
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from codes.construction import (
    DefiningSets,
    code_length,
    generator_matrix,
    message_block_size,
)
from codes.errors import (
    CapExceededError,
    ConstructionError,
    DegenerateCodeError,
    DimensionMismatchError,
    VerificationError,
)
from codes.poset import OrderIdealSpec, down_set_size, sign_eval_ideal, validate_spec
from codes.ring_core import (
    BinaryVector,
    QuaternaryVector,
    alpha_rows,
    decompose,
    gray_map_rows,
    lee_weight_rows,
    message_rows,
    pack_bits,
    word_bits,
)
from codes.standard_form import StandardFormReport, standard_form
from utils.config import settings
from utils.helpers import chunk_ranges, format_enumerator, merge_counts, partition_ranges
from utils.logger import setup_logging

logger = setup_logging()


class LeeWeightDistribution(BaseModel):
    """Weight multiplicities over all 4^n messages and over distinct codewords."""

    model_config = ConfigDict(frozen=True)

    n: int
    multiplicity: Dict[int, int]
    distinct: Dict[int, int]
    kernel_size: int

    @model_validator(mode="after")
    def _check_totals(self) -> "LeeWeightDistribution":
        if sum(self.multiplicity.values()) != 4 ** self.n:
            raise VerificationError(
                f"multiplicities sum to {sum(self.multiplicity.values())}, expected 4^{self.n}"
            )
        if self.multiplicity.get(0) != self.kernel_size or self.distinct.get(0) != 1:
            raise VerificationError("weight 0 must carry the kernel and exactly one distinct codeword")
        return self

    @classmethod
    def from_multiplicity(cls, n: int, counts: Mapping[int, int]) -> "LeeWeightDistribution":
        multiplicity = {int(w): int(c) for w, c in sorted(counts.items()) if c}
        kernel = multiplicity.get(0, 0)
        if kernel == 0 or any(c % kernel for c in multiplicity.values()):
            raise VerificationError(f"counts {multiplicity} are not a union of kernel cosets")
        distinct = {w: c // kernel for w, c in multiplicity.items()}
        return cls(n=n, multiplicity=multiplicity, distinct=distinct, kernel_size=kernel)

    @property
    def code_size(self) -> int:
        return sum(self.distinct.values())

    @property
    def weight_count(self) -> int:
        """t for a t-weight code."""
        return sum(1 for w in self.distinct if w)

    def enumerator(self) -> str:
        return format_enumerator(self.distinct)


class GrayImageReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    binary_length: int
    binary_size: int
    min_distance: int
    is_linear: bool
    witness: Optional[Tuple[int, int]] = None

    @property
    def dimension(self) -> Optional[int]:
        if not self.is_linear:
            return None
        return self.binary_size.bit_length() - 1

    def parameters(self) -> str:
        if self.is_linear:
            return f"[{self.binary_length},{self.dimension},{self.min_distance}]"
        return f"({self.binary_length},{self.binary_size},{self.min_distance})"


# Brute force

def _weight_counts(l_rows: np.ndarray, n: int, start: int, stop: int) -> Dict[int, int]:
    """Weight map of the codewords of messages [start, stop)."""
    counts: Counter = Counter()
    block = message_block_size(l_rows.shape[0])
    l_cols = l_rows.T.astype(np.int64)
    for lo, hi in chunk_ranges(stop - start, block):
        messages = message_rows(start + lo, start + hi, n)
        weights, frequencies = np.unique(lee_weight_rows((messages @ l_cols) % 4), return_counts=True)
        counts.update(dict(zip(weights.tolist(), frequencies.tolist())))
    return dict(counts)


def brute_force_distribution(sets: DefiningSets, jobs: int = 1) -> LeeWeightDistribution:
    n = sets.n
    if n > settings.BRUTE_FORCE_MAX_N:
        raise CapExceededError(f"n={n} exceeds the brute-force cap {settings.BRUTE_FORCE_MAX_N}")
    ranges = partition_ranges(1 << (2 * n), jobs)

    counts: Dict[int, int] = {}
    if len(ranges) == 1:
        counts = _weight_counts(sets.l_rows, n, *ranges[0])
    else:
        with ProcessPoolExecutor(max_workers=len(ranges)) as pool:
            futures = [pool.submit(_weight_counts, sets.l_rows, n, start, stop) for start, stop in ranges]
            for future in futures:
                counts = merge_counts(counts, future.result())

    logger.debug(f"Brute force over {1 << (2 * n)} messages for {sets.spec.describe()} with {len(ranges)} worker(s)")
    return LeeWeightDistribution.from_multiplicity(n, counts)


# Fast path

def _nonempty_code_length(spec: OrderIdealSpec) -> int:
    length = code_length(spec)
    if length == 0:
        raise ConstructionError(f"D is empty for {spec.describe()}: the code has length 0")
    return length


def fast_lee_weight(a: QuaternaryVector, spec: OrderIdealSpec) -> int:
    if a.n != spec.n:
        raise DimensionMismatchError(f"message has dimension {a.n}, code expects {spec.n}")
    length = _nonempty_code_length(spec)
    parts = decompose(a)
    if parts.low.weight:
        return length
    if not parts.high.weight:
        return 0
    return length + (1 << spec.n) * sign_eval_ideal(spec, parts.high)


def _even_prefix_counts(bits: np.ndarray) -> np.ndarray:
    """Row-wise number of even-weight prefixes."""
    if bits.shape[1] == 0:
        return np.zeros(bits.shape[0], dtype=np.int64)
    return (np.cumsum(bits, axis=1) % 2 == 0).sum(axis=1)


def _sign_weights(spec: OrderIdealSpec, beta: np.ndarray, length: int) -> np.ndarray:
    """|L| + 2^n·H_{I(P)}((-1)^β) for every row of β."""
    i, d = spec.chain_one_length, spec.chain_two_length
    s = _even_prefix_counts(beta[:, :i])
    t = _even_prefix_counts(beta[:, spec.m:spec.m + d])
    # chains of length 0 contribute the factor 1 + 2*0 - 0 = 1
    return length + (1 << spec.n) * (1 + 2 * s - i) * (1 + 2 * t - d)


def fast_lee_weights(spec: OrderIdealSpec, messages: np.ndarray) -> np.ndarray:
    """Vectorized fast_lee_weight for a block of messages (one per row)."""
    length = _nonempty_code_length(spec)
    messages = np.asarray(messages, dtype=np.int64) % 4
    if messages.ndim != 2 or messages.shape[1] != spec.n:
        raise DimensionMismatchError(f"messages have shape {messages.shape}, code expects rows of {spec.n}")
    weights = _sign_weights(spec, messages >> 1, length)
    weights[(messages & 1).any(axis=1)] = length
    weights[~messages.any(axis=1)] = 0
    return weights


def fast_path_distribution(spec: OrderIdealSpec) -> LeeWeightDistribution:
    """Sweep β over F_2^n with the character-sum weight; α ≠ 0 messages all weigh |L|."""
    if spec.n > settings.FAST_PATH_MAX_N:
        raise CapExceededError(f"n={spec.n} exceeds the fast-path cap {settings.FAST_PATH_MAX_N}")
    length = _nonempty_code_length(spec)
    n = spec.n
    counts: Dict[int, int] = {length: (1 << (2 * n)) - (1 << n)}
    block = max(1, settings.ENUMERATION_CHUNK_SIZE // n)
    for start, stop in chunk_ranges(1 << n, block):
        words = np.arange(start, stop, dtype=np.int64)
        weights = _sign_weights(spec, word_bits(words, n), length)
        weights[words == 0] = 0
        values, frequencies = np.unique(weights, return_counts=True)
        counts = merge_counts(counts, dict(zip(values.tolist(), frequencies.tolist())))
    return LeeWeightDistribution.from_multiplicity(n, counts)


# Closed form

def _table_rows(n: int, i: int, d: int) -> Iterator[Tuple[int, int]]:
    """
    (weight, frequency) rows of the weight tables for chain lengths i and d = j - m.

    A missing chain has length 0, which turns the union table into the single-chain
    tables: with d = 0 only t = 0 occurs and (s, t) = (i, 0) is the excluded row.
    """
    size = (i + 1) * (d + 1)
    length = (1 << n) * ((1 << n) - size)
    yield 0, 1
    yield length, (1 << n) * ((1 << n) - 1)
    for s in range(i + 1):
        for t in range(d + 1):
            if (s, t) == (i, d):
                continue
            weight = (1 << (n + 1)) * ((1 << (n - 1)) + s + t + 2 * s * t - (s + 1) * d - (t + 1) * i)
            yield weight, (1 << (n - i - d)) * math.comb(i, s) * math.comb(d, t)
    yield 1 << (2 * n), (1 << (n - i - d)) - 1


def closed_form_distribution(spec: OrderIdealSpec) -> LeeWeightDistribution:
    validate_spec(spec)
    n = spec.n
    if down_set_size(spec) == 1 << n:
        raise ConstructionError(f"D is empty for {spec.describe()}: the code has length 0")
    counts: Dict[int, int] = {}
    for weight, frequency in _table_rows(n, spec.chain_one_length, spec.chain_two_length):
        if frequency:
            counts[weight] = counts.get(weight, 0) + frequency
    return LeeWeightDistribution.from_multiplicity(n, counts)


def min_lee_weight(distribution: LeeWeightDistribution) -> int:
    weights = [w for w, c in distribution.multiplicity.items() if w > 0 and c > 0]
    if not weights:
        raise DegenerateCodeError("the code has no nonzero codeword")
    return min(weights)


def quaternary_parameters(distribution: LeeWeightDistribution, length: int) -> Tuple[int, int, int]:
    """(length, size, minimum Lee distance)."""
    return length, distribution.code_size, min_lee_weight(distribution)


# Gray image

def linearity_targets(sets: DefiningSets) -> Iterator[Tuple[int, int, np.ndarray]]:
    """2·α(c_{e_i}) ∗ α(c_{e_j}) for 1 <= i <= j <= n."""
    alphas = alpha_rows(generator_matrix(sets)).astype(np.int64)
    for i in range(sets.n):
        for j in range(i, sets.n):
            yield i + 1, j + 1, 2 * (alphas[i] & alphas[j])


def gray_linearity(
    sets: DefiningSets,
    distribution: Optional[LeeWeightDistribution] = None,
    report: Optional[StandardFormReport] = None
) -> GrayImageReport:
    """Decide whether φ(C_L) is linear by testing every generator pair product for membership."""
    report = report or standard_form(generator_matrix(sets))
    distribution = distribution or closed_form_distribution(sets.spec)

    witness = None
    for i, j, target in linearity_targets(sets):
        if report.solve(target) is None:
            witness = (i, j)
            break

    if report.size != distribution.code_size:
        raise VerificationError(
            f"standard form size {report.size} != distribution size {distribution.code_size}"
        )
    return GrayImageReport(
        binary_length=2 * sets.length,
        binary_size=report.size,
        min_distance=min_lee_weight(distribution),
        is_linear=witness is None,
        witness=witness,
    )


def distinct_codewords(sets: DefiningSets, report: Optional[StandardFormReport] = None) -> List[np.ndarray]:
    if sets.n > settings.BRUTE_FORCE_MAX_N:
        raise CapExceededError(f"n={sets.n} exceeds the enumeration cap {settings.BRUTE_FORCE_MAX_N}")
    report = report or standard_form(generator_matrix(sets))
    return list(report.codewords())


def gray_closure_is_linear(sets: DefiningSets) -> bool:
    """Exhaustively test whether the Gray image is closed under binary addition."""
    if sets.n > settings.CLOSURE_CHECK_MAX_N:
        raise CapExceededError(f"n={sets.n} exceeds the closure-check cap {settings.CLOSURE_CHECK_MAX_N}")
    words = [pack_bits(bits) for bits in gray_map_rows(np.array(distinct_codewords(sets)))]
    image = set(words)
    return all(x ^ y in image for idx, x in enumerate(words) for y in words[idx + 1:])


def gray_image_words(sets: DefiningSets) -> List[BinaryVector]:
    rows = gray_map_rows(np.array(distinct_codewords(sets)))
    return [BinaryVector.from_bits(row) for row in rows]
