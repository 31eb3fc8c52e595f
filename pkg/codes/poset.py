"""
The two-chain poset m ⊕ n, its order ideals, down-sets and generating functions.

Chain one is {1, ..., m}, chain two is {m+1, ..., n}. Every nonempty order ideal
is a prefix of chain one, a prefix of chain two, or a union of one of each, so an
ideal is described by the two prefix lengths.
"""
import math
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from codes.errors import CapExceededError, DimensionMismatchError, ParameterRangeError
from codes.ring_core import BinaryVector
from utils.config import settings


class IdealKind(str, Enum):
    CHAIN_ONE = "chain-one"
    CHAIN_TWO = "chain-two"
    UNION = "union"


class TwoChainPoset(BaseModel):
    """Disjoint union of the chains 1 < ... < m and m+1 < ... < n."""

    model_config = ConfigDict(frozen=True)

    n: int
    m: int

    @property
    def second_chain_length(self) -> int:
        return self.n - self.m

    def leq(self, x: int, y: int) -> bool:
        """x ⪯ y in the poset (1-based elements)."""
        if x <= self.m and y <= self.m:
            return x <= y
        if x > self.m and y > self.m:
            return x <= y
        return False


class OrderIdealSpec(BaseModel):
    """One of the ideal shapes [i], [j]\\[m], [i] ∪ ([j]\\[m]) on a given poset."""

    model_config = ConfigDict(frozen=True)

    poset: TwoChainPoset
    kind: IdealKind
    i: Optional[int] = None
    j: Optional[int] = None

    @classmethod
    def chain_one(cls, n: int, m: int, i: int) -> "OrderIdealSpec":
        return cls(poset=TwoChainPoset(n=n, m=m), kind=IdealKind.CHAIN_ONE, i=i)

    @classmethod
    def chain_two(cls, n: int, m: int, j: int) -> "OrderIdealSpec":
        return cls(poset=TwoChainPoset(n=n, m=m), kind=IdealKind.CHAIN_TWO, j=j)

    @classmethod
    def union(cls, n: int, m: int, i: int, j: int) -> "OrderIdealSpec":
        return cls(poset=TwoChainPoset(n=n, m=m), kind=IdealKind.UNION, i=i, j=j)

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def m(self) -> int:
        return self.poset.m

    @property
    def chain_one_length(self) -> int:
        """Number of chain-one elements in the ideal (i, or 0)."""
        return self.i if self.kind in (IdealKind.CHAIN_ONE, IdealKind.UNION) else 0

    @property
    def chain_two_length(self) -> int:
        """Number of chain-two elements in the ideal (j - m, or 0)."""
        return self.j - self.m if self.kind in (IdealKind.CHAIN_TWO, IdealKind.UNION) else 0

    @property
    def ideal(self) -> BinaryVector:
        return _prefix_vector(self.poset, self.chain_one_length, self.chain_two_length)

    def label(self) -> str:
        if self.kind == IdealKind.CHAIN_ONE:
            return f"chain-one({self.i})"
        if self.kind == IdealKind.CHAIN_TWO:
            return f"chain-two({self.j})"
        return f"union({self.i},{self.j})"

    def describe(self) -> str:
        return f"n={self.n} m={self.m} ideal={self.label()}"


class DownSet(BaseModel):
    """All order ideals contained in a given ideal, ∅ and the ideal itself included."""

    model_config = ConfigDict(frozen=True)

    spec: OrderIdealSpec
    members: Tuple[BinaryVector, ...]

    def __len__(self) -> int:
        return len(self.members)

    @property
    def words(self) -> frozenset:
        return frozenset(member.word for member in self.members)


def validate_poset(poset: TwoChainPoset) -> TwoChainPoset:
    if poset.n < 2:
        raise ParameterRangeError(f"n must be at least 2, got {poset.n}")
    if not 1 <= poset.m <= poset.n:
        raise ParameterRangeError(f"m must satisfy 1 <= m <= n={poset.n}, got {poset.m}")
    return poset


def validate_spec(spec: OrderIdealSpec) -> OrderIdealSpec:
    """Check the prefix-length bounds for the ideal shape; return it unchanged."""
    poset = validate_poset(spec.poset)
    n, m = poset.n, poset.m

    if spec.kind in (IdealKind.CHAIN_ONE, IdealKind.UNION):
        if spec.i is None or not 1 <= spec.i <= m:
            raise ParameterRangeError(f"i must satisfy 1 <= i <= m={m}, got {spec.i}")
    elif spec.i is not None:
        raise ParameterRangeError(f"{spec.kind.value} ideal takes no i")

    if spec.kind in (IdealKind.CHAIN_TWO, IdealKind.UNION):
        if m == n:
            raise ParameterRangeError(f"m = n = {n} leaves no second chain for a {spec.kind.value} ideal")
        if spec.j is None or not m + 1 <= spec.j <= n:
            raise ParameterRangeError(f"j must satisfy m+1={m + 1} <= j <= n={n}, got {spec.j}")
    elif spec.j is not None:
        raise ParameterRangeError(f"{spec.kind.value} ideal takes no j")

    if n > settings.CLOSED_FORM_MAX_N:
        raise CapExceededError(f"n={n} exceeds the closed-form cap {settings.CLOSED_FORM_MAX_N}")
    return spec


def _prefix_vector(poset: TwoChainPoset, a: int, b: int) -> BinaryVector:
    """Ideal holding the first a elements of chain one and the first b of chain two."""
    bits = [0] * poset.n
    for k in range(a):
        bits[k] = 1
    for k in range(b):
        bits[poset.m + k] = 1
    return BinaryVector(n=poset.n, bits=tuple(bits))


def _prefix_length(bits: Sequence[int]) -> Optional[int]:
    """Length of the leading run of ones, or None if a one follows a zero."""
    length = 0
    while length < len(bits) and bits[length]:
        length += 1
    if any(bits[length:]):
        return None
    return length


def is_order_ideal(subset: BinaryVector, poset: TwoChainPoset) -> bool:
    """True iff the subset is downward closed in both chains. ∅ counts as an ideal."""
    if subset.n != poset.n:
        raise DimensionMismatchError(f"subset has dimension {subset.n}, poset has {poset.n}")
    bits = subset.bits
    return _prefix_length(bits[:poset.m]) is not None and _prefix_length(bits[poset.m:]) is not None


def classify_ideal(subset: BinaryVector, poset: TwoChainPoset) -> OrderIdealSpec:
    """Express a nonempty order ideal as its unique OrderIdealSpec."""
    if not is_order_ideal(subset, poset):
        raise ParameterRangeError(f"{subset} is not an order ideal of {poset.m}⊕{poset.n}")
    a = _prefix_length(subset.bits[:poset.m])
    b = _prefix_length(subset.bits[poset.m:])
    if a and b:
        return OrderIdealSpec.union(poset.n, poset.m, a, poset.m + b)
    if a:
        return OrderIdealSpec.chain_one(poset.n, poset.m, a)
    if b:
        return OrderIdealSpec.chain_two(poset.n, poset.m, poset.m + b)
    raise ParameterRangeError("the empty set is not an order ideal spec")


def all_specs(poset: TwoChainPoset) -> List[OrderIdealSpec]:
    """Every valid OrderIdealSpec on the poset, chain-one first, then chain-two, then unions."""
    validate_poset(poset)
    n, m = poset.n, poset.m
    specs = [OrderIdealSpec.chain_one(n, m, i) for i in range(1, m + 1)]
    specs += [OrderIdealSpec.chain_two(n, m, j) for j in range(m + 1, n + 1)]
    specs += [
        OrderIdealSpec.union(n, m, i, j)
        for i in range(1, m + 1)
        for j in range(m + 1, n + 1)
    ]
    return specs


def enumerate_order_ideals(poset: TwoChainPoset) -> List[BinaryVector]:
    """Brute-force filter of all 2^n subsets, ascending by packed word."""
    if poset.n > settings.MATERIALIZE_MAX_N:
        raise CapExceededError(f"n={poset.n} exceeds the materialization cap {settings.MATERIALIZE_MAX_N}")
    subsets = (BinaryVector.from_word(poset.n, word) for word in range(1 << poset.n))
    return [subset for subset in subsets if is_order_ideal(subset, poset)]


def down_set_size(spec: OrderIdealSpec) -> int:
    return (spec.chain_one_length + 1) * (spec.chain_two_length + 1)


def down_set(spec: OrderIdealSpec) -> DownSet:
    """Sub-ideals of the given ideal sorted by (chain-one prefix, chain-two prefix)."""
    validate_spec(spec)
    members = tuple(
        _prefix_vector(spec.poset, a, b)
        for a in range(spec.chain_one_length + 1)
        for b in range(spec.chain_two_length + 1)
    )
    return DownSet(spec=spec, members=members)


def generating_function_eval(collection: Iterable[BinaryVector], point: Sequence[int]) -> int:
    """Evaluate H_X(x_1, ..., x_n) = Σ_{u ∈ X} Π x_k^{u_k} at an integer point."""
    total = 0
    for member in collection:
        if member.n != len(point):
            raise DimensionMismatchError(f"member dimension {member.n} != point dimension {len(point)}")
        total += math.prod(value for value, bit in zip(point, member.bits) if bit)
    return total


def even_prefix_count(bits: Sequence[int]) -> int:
    """Number of k in [1, len] whose prefix bits[:k] has even weight."""
    count = 0
    parity = 0
    for bit in bits:
        parity ^= bit
        if parity == 0:
            count += 1
    return count


def sign_eval_ideal(spec: OrderIdealSpec, beta: BinaryVector) -> int:
    """
    Closed form of H_{I(P)}((-1)^{β_1}, ..., (-1)^{β_n}).

    With s the even-prefix count of β on chain one up to i and t the count on
    chain two up to j, the value is 1+2s-i, 1+2t-(j-m), or for a union
    1+2s-i+2t-(j-m)+(2s-i)(2t-(j-m)).
    """
    if beta.n != spec.n:
        raise DimensionMismatchError(f"beta has dimension {beta.n}, poset has {spec.n}")
    i, d = spec.chain_one_length, spec.chain_two_length
    s = even_prefix_count(beta.bits[:i])
    t = even_prefix_count(beta.bits[spec.m:spec.m + d])
    if spec.kind == IdealKind.CHAIN_ONE:
        return 1 + 2 * s - i
    if spec.kind == IdealKind.CHAIN_TWO:
        return 1 + 2 * t - d
    return 1 + 2 * s - i + 2 * t - d + (2 * s - i) * (2 * t - d)
