"""
Tests for the Gray image: linearity verdicts, witnesses and binary parameters
"""
import numpy as np
import pytest

from codes.analysis import (
    GrayImageReport,
    closed_form_distribution,
    distinct_codewords,
    gray_closure_is_linear,
    gray_image_words,
    gray_linearity,
    linearity_targets,
)
from codes.construction import build_defining_sets, generator_matrix
from codes.errors import CapExceededError, VerificationError
from codes.poset import OrderIdealSpec, TwoChainPoset, all_specs
from codes.ring_core import hamming_distance
from codes.standard_form import standard_form

EMPTY = OrderIdealSpec.union(2, 1, 1, 2)


@pytest.mark.parametrize("spec,linear,params,witness", [
    (OrderIdealSpec.chain_one(2, 2, 2), True, "[8,3,4]", None),
    (OrderIdealSpec.chain_one(2, 2, 1), True, "[16,4,8]", None),
    (OrderIdealSpec.chain_one(3, 3, 2), False, "(80,64,32)", (1, 2)),
    (OrderIdealSpec.chain_one(3, 3, 1), False, "(96,64,48)", (1, 2)),
    (OrderIdealSpec.chain_one(3, 3, 3), False, "(64,64,16)", (2, 3)),
    (OrderIdealSpec.union(3, 1, 1, 2), False, "(64,64,32)", (1, 2)),
])
def test_pinned_verdicts(spec, linear, params, witness):
    report = gray_linearity(build_defining_sets(spec))
    assert report.is_linear is linear
    assert report.parameters() == params
    assert report.witness == witness


def test_verdict_agrees_with_closure_check():
    """Test the generator-pair criterion against exhaustive closure for n <= 4"""
    for n in range(2, 5):
        for m in range(1, n + 1):
            for spec in all_specs(TwoChainPoset(n=n, m=m)):
                if spec == EMPTY:
                    continue
                sets = build_defining_sets(spec)
                assert gray_linearity(sets).is_linear == gray_closure_is_linear(sets), spec.describe()


def test_witness_product_is_not_a_codeword():
    sets = build_defining_sets(OrderIdealSpec.chain_one(3, 3, 3))
    report = standard_form(generator_matrix(sets))
    verdicts = {(i, j): report.solve(target) is not None for i, j, target in linearity_targets(sets)}
    assert verdicts[(1, 2)] and verdicts[(1, 3)]
    assert not verdicts[(2, 3)]
    assert all(verdicts[(k, k)] for k in range(1, 4))


def test_product_with_known_message():
    """Test that the (1,2) product of the n=2 chain-one(1) code is the codeword of (2,0)"""
    sets = build_defining_sets(OrderIdealSpec.chain_one(2, 2, 1))
    target = next(t for i, j, t in linearity_targets(sets) if (i, j) == (1, 2))
    message = standard_form(generator_matrix(sets)).solve(target)
    assert message.tolist() == [2, 0]


def test_size_disagreement_is_reported():
    sets = build_defining_sets(OrderIdealSpec.chain_one(2, 2, 2))
    wrong = closed_form_distribution(OrderIdealSpec.chain_one(2, 2, 1))
    with pytest.raises(VerificationError):
        gray_linearity(sets, distribution=wrong)


def test_gray_image_words():
    sets = build_defining_sets(OrderIdealSpec.chain_one(2, 2, 2))
    words = gray_image_words(sets)
    assert len(words) == 8
    assert len({w.bits for w in words}) == 8
    assert all(w.n == 8 for w in words)
    distance = min(
        hamming_distance(u, v) for idx, u in enumerate(words) for v in words[idx + 1:]
    )
    assert distance == 4


def test_distinct_codewords_count():
    sets = build_defining_sets(OrderIdealSpec.union(3, 1, 1, 3))
    words = distinct_codewords(sets)
    assert len(words) == 32
    assert len({tuple(np.asarray(w).tolist()) for w in words}) == 32


def test_closure_cap():
    with pytest.raises(CapExceededError):
        gray_closure_is_linear(build_defining_sets(OrderIdealSpec.chain_one(5, 5, 1)))


def test_report_rendering():
    linear = GrayImageReport(binary_length=8, binary_size=8, min_distance=4, is_linear=True)
    assert linear.dimension == 3
    nonlinear = GrayImageReport(binary_length=64, binary_size=64, min_distance=16, is_linear=False, witness=(2, 3))
    assert nonlinear.dimension is None
    assert nonlinear.parameters() == "(64,64,16)"
