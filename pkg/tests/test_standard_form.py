"""
Tests for Z4 row reduction and membership solving
"""
import numpy as np
import pytest

from codes.construction import build_defining_sets, codeword_rows, generator_matrix, generator_rows, kernel_and_size
from codes.errors import DimensionMismatchError
from codes.poset import OrderIdealSpec, TwoChainPoset, all_specs
from codes.ring_core import QuaternaryVector, message_rows
from codes.standard_form import membership, standard_form

EMPTY = OrderIdealSpec.union(2, 1, 1, 2)


def nonempty_specs(max_n=4, min_n=2):
    for n in range(min_n, max_n + 1):
        for m in range(1, n + 1):
            for spec in all_specs(TwoChainPoset(n=n, m=m)):
                if spec != EMPTY:
                    yield spec


def as_set(words):
    return {tuple(int(x) for x in word) for word in words}


def test_type_of_small_matrices():
    report = standard_form(np.array([[2, 0], [0, 2]]))
    assert (report.k1, report.k2, report.size) == (0, 2, 4)

    report = standard_form(np.array([[1, 2], [2, 0]]))
    assert (report.k1, report.k2, report.size) == (1, 0, 4)
    assert as_set(report.codewords()) == {(0, 0), (1, 2), (2, 0), (3, 2)}

    report = standard_form(np.array([[3, 1, 0], [0, 2, 2], [3, 3, 2]]))
    assert report.size == 8
    assert report.reduced_rows()[0].tolist()[0] == 1


def test_zero_matrix():
    report = standard_form(np.zeros((2, 3), dtype=np.int64))
    assert report.size == 1
    assert as_set(report.codewords()) == {(0, 0, 0)}


def test_size_matches_enumeration():
    """Test 4^k1 * 2^k2 against the enumerated code size for n <= 5"""
    for spec in nonempty_specs(5):
        sets = build_defining_sets(spec)
        report = standard_form(generator_matrix(sets))
        assert report.size == kernel_and_size(sets)[1], spec.describe()


@pytest.mark.parametrize("spec", [
    OrderIdealSpec.chain_one(2, 2, 2),
    OrderIdealSpec.chain_one(3, 3, 1),
    OrderIdealSpec.union(3, 1, 1, 3),
    OrderIdealSpec.chain_two(3, 1, 3),
])
def test_codewords_enumerate_the_code_once(spec):
    sets = build_defining_sets(spec)
    report = standard_form(generator_matrix(sets))
    words = list(report.codewords())
    assert len(words) == report.size
    assert len(as_set(words)) == report.size
    assert as_set(words) == as_set(codeword_rows(message_rows(0, 4 ** spec.n, spec.n), sets))


def test_solve_returns_a_generating_message():
    sets = build_defining_sets(OrderIdealSpec.union(3, 2, 2, 3))
    g = generator_matrix(sets)
    report = standard_form(g)
    messages = message_rows(0, 64, 3)
    for message, target in zip(messages, codeword_rows(messages, sets)):
        solution = report.solve(target)
        assert solution is not None
        assert np.array_equal((solution @ g) % 4, target)


def test_non_member():
    sets = build_defining_sets(OrderIdealSpec.chain_one(2, 2, 2))
    rows = generator_rows(sets)
    result = membership(QuaternaryVector.from_symbols([1, 0, 0, 0]), rows)
    assert not result.is_member
    assert result.message is None

    result = membership(QuaternaryVector.from_symbols([1, 3, 3, 1]), rows)
    assert result.is_member
    assert result.message.symbols in {(1, 1), (3, 1)}


def test_membership_dimension_check():
    rows = [QuaternaryVector.from_symbols([1, 2, 3])]
    with pytest.raises(DimensionMismatchError):
        membership(QuaternaryVector.from_symbols([1, 2]), rows)
    with pytest.raises(DimensionMismatchError):
        standard_form([QuaternaryVector.from_symbols([1, 2]), QuaternaryVector.from_symbols([1])])


class TestMembershipAgainstEnumeration:
    """Test Suite comparing standard-form solving with the enumerated code"""

    @pytest.fixture
    def rng(self):
        return np.random.default_rng(4)

    def check_targets(self, report, g, code, targets):
        for target in targets:
            solution = report.solve(target)
            assert (solution is not None) == (tuple(int(x) for x in target) in code)
            if solution is not None:
                assert np.array_equal((solution @ g) % 4, target)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_mutated_codewords(self, rng, n):
        for spec in nonempty_specs(n, n):
            sets = build_defining_sets(spec)
            g = generator_matrix(sets)
            words = codeword_rows(message_rows(0, 4 ** n, n), sets)
            code = as_set(words)
            picks = words[rng.integers(0, len(words), 20)]
            shifts = np.zeros_like(picks)
            shifts[np.arange(len(picks)), rng.integers(0, sets.length, len(picks))] = rng.integers(1, 4, len(picks))
            targets = np.concatenate([picks, (picks + shifts) % 4])
            self.check_targets(standard_form(g), g, code, targets)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_uniform_targets(self, rng, n):
        for spec in nonempty_specs(n, n):
            sets = build_defining_sets(spec)
            g = generator_matrix(sets)
            code = as_set(codeword_rows(message_rows(0, 4 ** n, n), sets))
            targets = rng.integers(0, 4, (20, sets.length))
            self.check_targets(standard_form(g), g, code, targets)
