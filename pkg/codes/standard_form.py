"""
Row reduction of a Z4 generator matrix and membership solving.

Unit pivots (1 or 3) are taken first: the first row holding a unit, at its lowest
unit column, is scaled to 1 and its column cleared from every other row. Once no
unit is left, every remaining row is even and the 2-pivots are taken the same way
among the remaining rows. The reduced code has 4^k1 * 2^k2 codewords and each
codeword has exactly one expansion x·G with x_u in Z4 on unit rows and y_w in {0,1}
on 2-rows.
"""
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict

from codes.errors import DimensionMismatchError
from codes.ring_core import QuaternaryVector

RowsLike = Union[np.ndarray, Sequence[QuaternaryVector]]


class StandardFormReport(BaseModel):
    """Reduced rows with their pivots and the message combination behind each row."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k1: int
    k2: int
    rows: np.ndarray
    transform: np.ndarray
    unit_pivots: Tuple[Tuple[int, int], ...]
    two_pivots: Tuple[Tuple[int, int], ...]

    @property
    def size(self) -> int:
        return 4 ** self.k1 * 2 ** self.k2

    @property
    def length(self) -> int:
        return int(self.rows.shape[1])

    def reduced_rows(self) -> np.ndarray:
        """The k1 unit rows followed by the k2 2-rows."""
        order = [row for row, _ in self.unit_pivots] + [row for row, _ in self.two_pivots]
        return self.rows[order]

    def solve(self, target: np.ndarray) -> Optional[np.ndarray]:
        """Return a message a with a·G = target, or None if target is not a codeword."""
        residual = np.asarray(target, dtype=np.int64) % 4
        if residual.shape != (self.length,):
            raise DimensionMismatchError(f"target has shape {residual.shape}, code length is {self.length}")
        message = np.zeros(self.transform.shape[1], dtype=np.int64)

        for row, col in self.unit_pivots:
            coefficient = residual[col]
            if coefficient:
                residual = (residual - coefficient * self.rows[row]) % 4
                message = (message + coefficient * self.transform[row]) % 4

        for row, col in self.two_pivots:
            value = residual[col]
            if value % 2:
                return None
            if value:
                residual = (residual - self.rows[row]) % 4
                message = (message + self.transform[row]) % 4

        if residual.any():
            return None
        return message

    def codewords(self) -> Iterator[np.ndarray]:
        """Every codeword exactly once."""
        basis = self.reduced_rows()
        ranges = [range(4)] * self.k1 + [range(2)] * self.k2
        for coefficients in product(*ranges):
            yield (np.array(coefficients, dtype=np.int64) @ basis) % 4 if basis.size else np.zeros(self.length, dtype=np.int64)


class MembershipResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    is_member: bool
    message: Optional[QuaternaryVector] = None


def _as_matrix(rows: RowsLike) -> np.ndarray:
    if isinstance(rows, np.ndarray):
        return rows.astype(np.int64) % 4
    rows = list(rows)
    if not rows:
        return np.zeros((0, 0), dtype=np.int64)
    if len({row.n for row in rows}) != 1:
        raise DimensionMismatchError("generator rows must share a length")
    return np.array([row.symbols for row in rows], dtype=np.int64)


def _first_pivot(matrix: np.ndarray, candidates: List[int], values: Tuple[int, ...]) -> Optional[Tuple[int, int]]:
    for row in candidates:
        hits = np.flatnonzero(np.isin(matrix[row], values))
        if hits.size:
            return row, int(hits[0])
    return None


def standard_form(rows: RowsLike) -> StandardFormReport:
    matrix = _as_matrix(rows)
    count = matrix.shape[0]
    transform = np.eye(count, dtype=np.int64)
    active = list(range(count))
    unit_pivots: List[Tuple[int, int]] = []
    two_pivots: List[Tuple[int, int]] = []

    while True:
        pivot = _first_pivot(matrix, active, (1, 3))
        if pivot is None:
            break
        row, col = pivot
        if matrix[row, col] == 3:
            matrix[row] = (3 * matrix[row]) % 4
            transform[row] = (3 * transform[row]) % 4
        for other in range(count):
            factor = matrix[other, col]
            if other != row and factor:
                matrix[other] = (matrix[other] - factor * matrix[row]) % 4
                transform[other] = (transform[other] - factor * transform[row]) % 4
        unit_pivots.append((row, col))
        active.remove(row)

    # every remaining row is even now
    while True:
        pivot = _first_pivot(matrix, active, (2,))
        if pivot is None:
            break
        row, col = pivot
        for other, _ in two_pivots:
            if matrix[other, col]:
                matrix[other] = (matrix[other] - matrix[row]) % 4
                transform[other] = (transform[other] - transform[row]) % 4
        for other in active:
            if other != row and matrix[other, col]:
                matrix[other] = (matrix[other] - matrix[row]) % 4
                transform[other] = (transform[other] - transform[row]) % 4
        two_pivots.append((row, col))
        active.remove(row)

    return StandardFormReport(
        k1=len(unit_pivots),
        k2=len(two_pivots),
        rows=matrix,
        transform=transform,
        unit_pivots=tuple(unit_pivots),
        two_pivots=tuple(two_pivots),
    )


def membership(target: QuaternaryVector, rows: RowsLike) -> MembershipResult:
    """Decide whether target is a Z4-combination of rows, with a solving message when it is."""
    report = standard_form(rows)
    if target.n != report.length:
        raise DimensionMismatchError(f"target has length {target.n}, code length is {report.length}")
    message = report.solve(target.as_array())
    if message is None:
        return MembershipResult(is_member=False)
    return MembershipResult(is_member=True, message=QuaternaryVector.from_symbols(message))
