"""
Defining sets D and L and the code C_L = {(<a, l>)_{l ∈ L} : a ∈ Z_4^n}.

D is the complement of the down-set in F_2^n, ordered by packed word. L = D + 2F_2^n
is ordered by t1 (in D order) then t2 (by packed word), so l = t1 + 2*t2 sits at
position index(t1) * 2^n + word(t2).
"""
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from codes.errors import CapExceededError, ConstructionError, DimensionMismatchError
from codes.poset import OrderIdealSpec, down_set, down_set_size, validate_spec
from codes.ring_core import BinaryVector, QuaternaryVector, message_rows, word_bits
from utils.config import settings
from utils.helpers import chunk_ranges
from utils.logger import setup_logging

logger = setup_logging()


class DefiningSets(BaseModel):
    """D and L as integer arrays, one vector per row."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    spec: OrderIdealSpec
    d_rows: np.ndarray
    l_rows: np.ndarray

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def length(self) -> int:
        return int(self.l_rows.shape[0])

    @property
    def D(self) -> List[BinaryVector]:
        return [BinaryVector.from_bits(row) for row in self.d_rows]

    @property
    def L(self) -> List[QuaternaryVector]:
        return [QuaternaryVector.from_symbols(row) for row in self.l_rows]

    def split_l(self, position: int) -> Tuple[BinaryVector, BinaryVector]:
        """(t1, t2) with L[position] = t1 + 2*t2."""
        row = self.l_rows[position]
        return BinaryVector.from_bits(row & 1), BinaryVector.from_bits(row >> 1)


class CodeDescriptor(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    spec: OrderIdealSpec
    sets: DefiningSets
    length: int
    kernel_size: int
    size: int


def code_length(spec: OrderIdealSpec) -> int:
    """|L| = 2^n (2^n - |down-set|), without materializing anything."""
    validate_spec(spec)
    return (1 << spec.n) * ((1 << spec.n) - down_set_size(spec))


def _check_materialization_cap(n: int) -> None:
    if n > settings.MATERIALIZE_MAX_N:
        raise CapExceededError(f"n={n} exceeds the materialization cap {settings.MATERIALIZE_MAX_N}")


def _d_words(spec: OrderIdealSpec) -> np.ndarray:
    validate_spec(spec)
    _check_materialization_cap(spec.n)
    inside = down_set(spec).words
    words = np.array([word for word in range(1 << spec.n) if word not in inside], dtype=np.int64)
    if words.size == 0:
        raise ConstructionError(f"D is empty for {spec.describe()}: the down-set is all of F_2^{spec.n}")
    return words


def build_D(spec: OrderIdealSpec) -> List[BinaryVector]:
    return [BinaryVector.from_word(spec.n, int(word)) for word in _d_words(spec)]


def _l_rows(d_rows: np.ndarray, n: int) -> np.ndarray:
    _check_materialization_cap(n)
    t2 = word_bits(np.arange(1 << n), n)
    rows = d_rows[:, None, :].astype(np.uint8) + 2 * t2[None, :, :]
    return rows.reshape(-1, n) % 4


def build_L(D: List[BinaryVector], n: int) -> List[QuaternaryVector]:
    if not D:
        raise ConstructionError("D is empty")
    if any(t1.n != n for t1 in D):
        raise DimensionMismatchError(f"every member of D must have dimension {n}")
    d_rows = np.array([t1.bits for t1 in D], dtype=np.uint8)
    return [QuaternaryVector.from_symbols(row) for row in _l_rows(d_rows, n)]


def build_defining_sets(spec: OrderIdealSpec) -> DefiningSets:
    d_rows = word_bits(_d_words(spec), spec.n)
    l_rows = _l_rows(d_rows, spec.n)
    logger.debug(f"Built defining sets for {spec.describe()}: |D|={len(d_rows)}, |L|={len(l_rows)}")
    return DefiningSets(spec=spec, d_rows=d_rows, l_rows=l_rows)


def codeword_rows(messages: np.ndarray, sets: DefiningSets) -> np.ndarray:
    """Codewords of a block of messages (one per row)."""
    return (np.asarray(messages, dtype=np.int64) @ sets.l_rows.T.astype(np.int64)) % 4


def codeword(a: QuaternaryVector, sets: DefiningSets) -> QuaternaryVector:
    if a.n != sets.n:
        raise DimensionMismatchError(f"message has dimension {a.n}, code expects {sets.n}")
    return QuaternaryVector.from_symbols(codeword_rows(a.as_array()[None, :], sets)[0])


def generator_matrix(sets: DefiningSets) -> np.ndarray:
    """Row k is c_{e_k}, i.e. column k of L."""
    return sets.l_rows.T.astype(np.int64) % 4


def generator_rows(sets: DefiningSets) -> List[QuaternaryVector]:
    return [QuaternaryVector.from_symbols(row) for row in generator_matrix(sets)]


def message_block_size(length: int) -> int:
    return max(1, settings.ENUMERATION_CHUNK_SIZE // max(1, length))


def kernel_and_size(sets: DefiningSets) -> Tuple[int, int]:
    """Count messages with a zero codeword by enumeration; return (kernel_size, code_size)."""
    n = sets.n
    _check_materialization_cap(n)
    total = 1 << (2 * n)
    l_cols = sets.l_rows.T.astype(np.int64)
    column_block = max(1, min(sets.length, 64))

    kernel = 0
    for start, stop in chunk_ranges(total, message_block_size(column_block)):
        survivors = message_rows(start, stop, n)
        # most messages fail on the first few coordinates
        for col_start in range(0, sets.length, column_block):
            block = l_cols[:, col_start:col_start + column_block]
            survivors = survivors[~((survivors @ block) % 4).any(axis=1)]
            if survivors.shape[0] == 0:
                break
        kernel += int(survivors.shape[0])
    return kernel, total // kernel


def describe_code(spec: OrderIdealSpec) -> CodeDescriptor:
    sets = build_defining_sets(spec)
    kernel, size = kernel_and_size(sets)
    return CodeDescriptor(spec=spec, sets=sets, length=sets.length, kernel_size=kernel, size=size)


def rank_deficiency(spec: OrderIdealSpec) -> int:
    """n - rank_F2(D); the kernel of a -> c_a has 2^rank_deficiency elements."""
    basis: List[int] = []
    for word in _d_words(spec).tolist():
        for pivot in basis:
            word = min(word, word ^ pivot)
        if word:
            basis.append(word)
            basis.sort(reverse=True)
    return spec.n - len(basis)
