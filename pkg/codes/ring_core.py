"""
Symbol-level arithmetic over Z4 and F2: vectors, the Gray map, Lee and Hamming
weights, and the alpha reduction.

Coordinate 1 is the first element of every sequence. A binary vector also has a
packed word view in which bit k-1 holds coordinate k.
"""
from typing import Iterable, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from codes.errors import DimensionMismatchError

LEE_WEIGHTS = np.array([0, 1, 2, 1], dtype=np.int64)
ALPHA_TABLE = np.array([0, 1, 0, 1], dtype=np.uint8)


class BinaryVector(BaseModel):
    """Element of F_2^n, identified with its support."""

    model_config = ConfigDict(frozen=True)

    n: int
    bits: Tuple[int, ...]

    @field_validator("bits")
    @classmethod
    def _check_bits(cls, bits: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(bit not in (0, 1) for bit in bits):
            raise ValueError(f"binary symbols must be 0 or 1, got {bits}")
        return bits

    @model_validator(mode="after")
    def _check_length(self) -> "BinaryVector":
        if self.n < 1 or len(self.bits) != self.n:
            raise ValueError(f"expected {self.n} bits, got {len(self.bits)}")
        return self

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BinaryVector":
        values = tuple(int(bit) for bit in bits)
        return cls(n=len(values), bits=values)

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "BinaryVector":
        """Build from a set of 1-based coordinates."""
        chosen = set(support)
        if any(k < 1 or k > n for k in chosen):
            raise ValueError(f"support {sorted(chosen)} outside [1, {n}]")
        return cls(n=n, bits=tuple(1 if k in chosen else 0 for k in range(1, n + 1)))

    @classmethod
    def from_word(cls, n: int, word: int) -> "BinaryVector":
        return cls(n=n, bits=tuple((word >> k) & 1 for k in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "BinaryVector":
        return cls(n=n, bits=(0,) * n)

    @property
    def support(self) -> frozenset:
        return frozenset(k + 1 for k, bit in enumerate(self.bits) if bit)

    @property
    def word(self) -> int:
        return sum(bit << k for k, bit in enumerate(self.bits))

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def as_array(self) -> np.ndarray:
        return np.array(self.bits, dtype=np.uint8)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.bits)) + ")"


class QuaternaryVector(BaseModel):
    """Element of Z_4^n."""

    model_config = ConfigDict(frozen=True)

    n: int
    symbols: Tuple[int, ...]

    @field_validator("symbols")
    @classmethod
    def _check_symbols(cls, symbols: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(symbol not in (0, 1, 2, 3) for symbol in symbols):
            raise ValueError(f"quaternary symbols must lie in 0..3, got {symbols}")
        return symbols

    @model_validator(mode="after")
    def _check_length(self) -> "QuaternaryVector":
        if self.n < 1 or len(self.symbols) != self.n:
            raise ValueError(f"expected {self.n} symbols, got {len(self.symbols)}")
        return self

    @classmethod
    def from_symbols(cls, symbols: Iterable[int]) -> "QuaternaryVector":
        """Build from integers, reducing each modulo 4."""
        values = tuple(int(symbol) % 4 for symbol in symbols)
        return cls(n=len(values), symbols=values)

    @classmethod
    def zeros(cls, n: int) -> "QuaternaryVector":
        return cls(n=n, symbols=(0,) * n)

    @classmethod
    def unit(cls, n: int, k: int) -> "QuaternaryVector":
        """Standard basis vector e_k (1-based)."""
        return cls(n=n, symbols=tuple(1 if idx == k else 0 for idx in range(1, n + 1)))

    def as_array(self) -> np.ndarray:
        return np.array(self.symbols, dtype=np.int64)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.symbols)) + ")"


class Z4Decomposition(BaseModel):
    """The unique 2-adic split x = low + 2*high."""

    model_config = ConfigDict(frozen=True)

    low: BinaryVector
    high: BinaryVector

    @model_validator(mode="after")
    def _check_dimensions(self) -> "Z4Decomposition":
        if self.low.n != self.high.n:
            raise ValueError("low and high parts must share a dimension")
        return self

    def recompose(self) -> QuaternaryVector:
        return QuaternaryVector.from_symbols(
            a + 2 * b for a, b in zip(self.low.bits, self.high.bits)
        )


def _require_same_dimension(x: BaseModel, y: BaseModel) -> None:
    if x.n != y.n:
        raise DimensionMismatchError(f"dimension mismatch: {x.n} != {y.n}")


def decompose(x: QuaternaryVector) -> Z4Decomposition:
    """Split x into binary parts (a, b) with x = a + 2b."""
    return Z4Decomposition(
        low=BinaryVector(n=x.n, bits=tuple(symbol & 1 for symbol in x.symbols)),
        high=BinaryVector(n=x.n, bits=tuple(symbol >> 1 for symbol in x.symbols)),
    )


def add(x: QuaternaryVector, y: QuaternaryVector) -> QuaternaryVector:
    _require_same_dimension(x, y)
    return QuaternaryVector.from_symbols(a + b for a, b in zip(x.symbols, y.symbols))


def subtract(x: QuaternaryVector, y: QuaternaryVector) -> QuaternaryVector:
    _require_same_dimension(x, y)
    return QuaternaryVector.from_symbols(a - b for a, b in zip(x.symbols, y.symbols))


def scale(factor: int, x: QuaternaryVector) -> QuaternaryVector:
    return QuaternaryVector.from_symbols(factor * symbol for symbol in x.symbols)


def inner_product(x: QuaternaryVector, y: QuaternaryVector) -> int:
    """Euclidean inner product reduced modulo 4."""
    _require_same_dimension(x, y)
    return sum(a * b for a, b in zip(x.symbols, y.symbols)) % 4


def gray_map(x: QuaternaryVector) -> BinaryVector:
    """phi(a + 2b) = (b, a + b), first half then second half."""
    parts = decompose(x)
    first = parts.high.bits
    second = tuple(a ^ b for a, b in zip(parts.low.bits, parts.high.bits))
    return BinaryVector(n=2 * x.n, bits=first + second)


def hamming_weight(v: BinaryVector) -> int:
    return v.weight


def hamming_distance(u: BinaryVector, v: BinaryVector) -> int:
    _require_same_dimension(u, v)
    return (u.word ^ v.word).bit_count()


def lee_weight(x: QuaternaryVector) -> int:
    return int(sum(LEE_WEIGHTS[symbol] for symbol in x.symbols))


def lee_distance(x: QuaternaryVector, y: QuaternaryVector) -> int:
    return lee_weight(subtract(x, y))


def alpha_map(x: QuaternaryVector) -> BinaryVector:
    """Reduce 0,1,2,3 to 0,1,0,1."""
    return BinaryVector(n=x.n, bits=tuple(int(ALPHA_TABLE[symbol]) for symbol in x.symbols))


def componentwise_product(x: BinaryVector, y: BinaryVector) -> BinaryVector:
    _require_same_dimension(x, y)
    return BinaryVector(n=x.n, bits=tuple(a & b for a, b in zip(x.bits, y.bits)))


# Array forms used by the enumeration paths. Rows are vectors.

def lee_weight_rows(rows: np.ndarray) -> np.ndarray:
    """Lee weight of every row of an integer array with entries in 0..3."""
    return LEE_WEIGHTS[np.asarray(rows) % 4].sum(axis=-1)


def gray_map_rows(rows: np.ndarray) -> np.ndarray:
    """Gray image of every row; output rows have twice the length."""
    rows = np.asarray(rows, dtype=np.uint8) % 4
    high = rows >> 1
    return np.concatenate([high, (rows & 1) ^ high], axis=-1)


def alpha_rows(rows: np.ndarray) -> np.ndarray:
    return ALPHA_TABLE[np.asarray(rows) % 4]


def pack_bits(bits: Sequence[int]) -> int:
    """Pack a 0/1 sequence into an int with bit k-1 holding coordinate k."""
    packed = np.packbits(np.asarray(bits, dtype=np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def word_bits(words: np.ndarray, n: int) -> np.ndarray:
    """Unpack integer words into an array of n bits per row (coordinate 1 first)."""
    words = np.asarray(words, dtype=np.int64)
    return ((words[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(np.uint8)


def message_rows(start: int, stop: int, n: int) -> np.ndarray:
    """Messages a in Z_4^n with index in [start, stop); coordinate k is base-4 digit k-1."""
    index = np.arange(start, stop, dtype=np.int64)
    return ((index[:, None] >> (2 * np.arange(n, dtype=np.int64))) & 3).astype(np.int64)
