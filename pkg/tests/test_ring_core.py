"""
Tests for Z4 / F2 vector arithmetic, the Gray map and the weight functions
"""
from itertools import product

import numpy as np
import pytest

from codes.errors import DimensionMismatchError
from codes.ring_core import (
    BinaryVector,
    QuaternaryVector,
    add,
    alpha_map,
    componentwise_product,
    decompose,
    gray_map,
    gray_map_rows,
    hamming_distance,
    hamming_weight,
    inner_product,
    lee_distance,
    lee_weight,
    lee_weight_rows,
    message_rows,
    pack_bits,
    scale,
    subtract,
    word_bits,
)


def q(*symbols):
    return QuaternaryVector.from_symbols(symbols)


def test_from_symbols_reduces_mod_4():
    """Test that integer input is reduced into Z4"""
    assert q(4, 5, -1, 6).symbols == (0, 1, 3, 2)


def test_binary_vector_rejects_non_binary_symbols():
    with pytest.raises(ValueError):
        BinaryVector(n=2, bits=(0, 2))


def test_binary_vector_views():
    v = BinaryVector.from_support(4, {1, 3})
    assert v.bits == (1, 0, 1, 0)
    assert v.word == 5
    assert v.weight == 2
    assert BinaryVector.from_word(4, 5) == v


def test_decompose_recomposes():
    """Test the 2-adic split over every vector of Z_4^3"""
    for symbols in product(range(4), repeat=3):
        x = QuaternaryVector(n=3, symbols=symbols)
        parts = decompose(x)
        assert parts.recompose() == x
        assert all(a + 2 * b == s for a, b, s in zip(parts.low.bits, parts.high.bits, symbols))


def test_gray_map_is_high_then_sum():
    image = gray_map(q(0, 1, 2, 3))
    assert image.bits == (0, 0, 1, 1) + (0, 1, 1, 0)


def test_lee_weight_table():
    assert [lee_weight(q(s)) for s in range(4)] == [0, 1, 2, 1]
    assert lee_weight(q(1, 2, 3, 0)) == 4


def test_arithmetic():
    x, y = q(1, 2, 3), q(3, 3, 1)
    assert add(x, y) == q(0, 1, 0)
    assert subtract(x, y) == q(2, 3, 2)
    assert scale(2, x) == q(2, 0, 2)
    assert inner_product(x, y) == (3 + 6 + 3) % 4


def test_alpha_and_product():
    assert alpha_map(q(0, 1, 2, 3)).bits == (0, 1, 0, 1)
    u = BinaryVector.from_bits([1, 1, 0])
    v = BinaryVector.from_bits([0, 1, 1])
    assert componentwise_product(u, v).bits == (0, 1, 0)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        add(q(1, 2), q(1, 2, 3))
    with pytest.raises(DimensionMismatchError):
        hamming_distance(BinaryVector.zeros(2), BinaryVector.zeros(3))


def test_row_forms_match_scalar_forms():
    rows = np.array([[0, 1, 2, 3], [3, 3, 2, 0]])
    assert lee_weight_rows(rows).tolist() == [4, 4]
    assert gray_map_rows(rows)[0].tolist() == list(gray_map(q(0, 1, 2, 3)).bits)
    assert gray_map_rows(rows)[1].tolist() == list(gray_map(q(3, 3, 2, 0)).bits)


def test_word_packing():
    assert pack_bits([1, 0, 1]) == 5
    assert pack_bits([0] * 9 + [1]) == 512
    assert word_bits(np.array([5, 2]), 3).tolist() == [[1, 0, 1], [0, 1, 0]]


def test_message_rows_digit_order():
    """Test that coordinate k of message index t is base-4 digit k-1"""
    rows = message_rows(0, 16, 2)
    assert rows.shape == (16, 2)
    assert rows[1].tolist() == [1, 0]
    assert rows[4].tolist() == [0, 1]
    assert rows[15].tolist() == [3, 3]
    assert message_rows(6, 8, 2).tolist() == [[2, 1], [3, 1]]


def all_vectors(n):
    return [QuaternaryVector(n=n, symbols=s) for s in product(range(4), repeat=n)]


class TestGrayMap:
    """Test Suite for the Gray map as a weight-preserving isometry"""

    @pytest.fixture
    def rng(self):
        return np.random.default_rng(20240517)

    def test_known_images(self):
        assert gray_map(q(1, 3, 3, 1)).bits == (0, 1, 1, 0, 1, 0, 0, 1)
        assert lee_weight(q(2, 2, 2, 2)) == 8
        assert hamming_weight(gray_map(q(2, 2, 2, 2))) == 8

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_weight_is_preserved_exhaustively(self, n):
        for x in all_vectors(n):
            assert lee_weight(x) == hamming_weight(gray_map(x)), str(x)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_distance_is_preserved_exhaustively(self, n):
        vectors = all_vectors(n)
        for x in vectors:
            for y in vectors:
                assert lee_distance(x, y) == hamming_distance(gray_map(x), gray_map(y))

    def test_distance_is_preserved_on_all_pairs_n4(self):
        """Test every pair of Z_4^4 through the row forms"""
        rows = message_rows(0, 4 ** 4, 4)
        images = gray_map_rows(rows)
        lee = lee_weight_rows((rows[:, None, :] - rows[None, :, :]) % 4)
        hamming = (images[:, None, :] ^ images[None, :, :]).sum(axis=-1)
        assert np.array_equal(lee, hamming)

    @pytest.mark.parametrize("n", [5, 8, 12])
    def test_random_vectors(self, rng, n):
        for _ in range(200):
            x = QuaternaryVector(n=n, symbols=tuple(int(s) for s in rng.integers(0, 4, n)))
            y = QuaternaryVector(n=n, symbols=tuple(int(s) for s in rng.integers(0, 4, n)))
            assert lee_weight(x) == hamming_weight(gray_map(x))
            assert lee_distance(x, y) == hamming_distance(gray_map(x), gray_map(y))

    def test_row_forms_agree_on_random_rows(self, rng):
        rows = rng.integers(0, 4, (500, 12))
        assert np.array_equal(lee_weight_rows(rows), gray_map_rows(rows).sum(axis=-1))


class TestInnerProduct:
    """Test Suite for the Z4 inner product"""

    @pytest.fixture
    def rng(self):
        return np.random.default_rng(7)

    def random_vector(self, rng, n):
        return QuaternaryVector(n=n, symbols=tuple(int(s) for s in rng.integers(0, 4, n)))

    def test_known_value(self):
        assert inner_product(q(1, 2, 3), q(3, 3, 3)) == 2

    @pytest.mark.parametrize("n", [1, 3, 6, 12])
    def test_bilinear(self, rng, n):
        for _ in range(100):
            x, y, z = (self.random_vector(rng, n) for _ in range(3))
            c = int(rng.integers(0, 4))
            assert inner_product(add(x, y), z) == (inner_product(x, z) + inner_product(y, z)) % 4
            assert inner_product(x, add(y, z)) == (inner_product(x, y) + inner_product(x, z)) % 4
            assert inner_product(scale(c, x), y) == (c * inner_product(x, y)) % 4
            assert inner_product(x, scale(c, y)) == (c * inner_product(x, y)) % 4
            assert inner_product(x, y) == inner_product(y, x)
