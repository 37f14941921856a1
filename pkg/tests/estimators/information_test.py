# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import math
from fractions import Fraction

import numpy as np
import pytest

from qualm.classical.probability import FiniteProbability, mixture
from qualm.estimators.encoding import OutcomeEncoding, side_string
from qualm.estimators.information import (
    k_hat,
    mutual_info_hat,
    mutual_info_matrix,
    self_info_hat,
)
from qualm.estimators.models import (
    CodecModel,
    LengthModel,
    TinyMachineModel,
    ZeroModel,
    make_model,
)
from qualm.estimators.tiny_machine import enumerate_tiny_machine
from qualm.sampling.rng import SeededRng

ENC4 = OutcomeEncoding.for_qubits(4)


def double_sum(model, p, enc, side=b''):
    """Direct evaluation of log2 sum_ij 2^I(i:j) p(i) p(j)."""
    total = 0.0
    for i in range(p.size):
        for j in range(p.size):
            info = mutual_info_hat(model, i, j, enc, side)
            total += 2.0**info * p[i] * p[j]
    return float(np.log2(total))


def test_k_hat_of_outcome_string():
    assert k_hat(LengthModel(), ENC4.encode(9), side_string(4)) == 4.0


def test_zero_model_pairs():
    assert mutual_info_hat(ZeroModel(), 3, 3, ENC4) == 0.0
    assert mutual_info_hat(ZeroModel(), 3, 5, ENC4) == 0.0


def test_length_model_pairs():
    assert mutual_info_hat(LengthModel(), 6, 6, ENC4) == 4.0
    assert mutual_info_hat(LengthModel(), 6, 7, ENC4) == 0.0


def test_mutual_info_matrix_is_symmetric(generator):
    outcomes = generator.choice(16, size=8, replace=False)
    matrix = mutual_info_matrix(CodecModel(), outcomes, ENC4, b'4')
    assert np.array_equal(matrix, matrix.T)
    assert matrix.min() >= 0.0


def test_self_info_uniform_length_model():
    value = self_info_hat(LengthModel(), FiniteProbability.uniform(16), ENC4)
    assert value == pytest.approx(np.log2(2 - 2**-4))
    assert value == pytest.approx(0.95419, abs=1e-5)


@pytest.mark.parametrize('n', [1, 3, 6])
def test_self_info_uniform_closed_form(n):
    enc = OutcomeEncoding.for_qubits(n)
    value = self_info_hat(LengthModel(), FiniteProbability.uniform(2**n), enc)
    assert value == pytest.approx(np.log2(2 - 2.0**-n))


def test_self_info_zero_model_is_exactly_zero(generator):
    p = FiniteProbability(generator.dirichlet(np.ones(16)))
    assert self_info_hat(ZeroModel(), p, ENC4) == 0.0


@pytest.mark.parametrize('model', [LengthModel(), CodecModel()])
def test_self_info_point_mass(model):
    p = FiniteProbability.point_mass(11, 16)
    expected = mutual_info_hat(model, 11, 11, ENC4, b'4')
    assert self_info_hat(model, p, ENC4, b'4') == expected


def test_self_info_point_mass_length_model_is_complexity():
    p = FiniteProbability.point_mass(11, 16)
    assert self_info_hat(LengthModel(), p, ENC4, b'4') == 4.0


def test_self_info_is_nonnegative(generator):
    model = CodecModel()
    for _ in range(20):
        p = FiniteProbability(generator.dirichlet(np.full(16, 0.3)))
        assert self_info_hat(model, p, ENC4, b'4') >= 0.0


def test_self_info_matches_double_sum(generator):
    model = CodecModel()
    p = FiniteProbability(generator.dirichlet(np.ones(8)))
    enc = OutcomeEncoding.for_outcomes(8)
    value = self_info_hat(model, p, enc, b'3')
    assert value == pytest.approx(max(0.0, double_sum(model, p, enc, b'3')))


def test_tiny_machine_matches_exact_double_sum(generator):
    model = TinyMachineModel(enumerate_tiny_machine(12))
    enc = OutcomeEncoding.for_outcomes(4)
    for _ in range(200):
        counts = generator.multinomial(64, np.ones(4) / 4)
        p = FiniteProbability(counts / 64)
        total = Fraction(0)
        for i in range(4):
            for j in range(4):
                info = mutual_info_hat(model, i, j, enc)
                assert info == int(info)
                weight = Fraction(int(counts[i]) * int(counts[j]), 4096)
                total += 2 ** int(info) * weight
        assert self_info_hat(model, p, enc) == pytest.approx(
            math.log2(total), rel=0, abs=1e-13
        )


def test_self_info_is_invariant_under_relabelling(generator):
    p = FiniteProbability(generator.dirichlet(np.ones(16)))
    permuted = p.permuted(generator.permutation(16))
    assert self_info_hat(LengthModel(), permuted, ENC4) == pytest.approx(
        self_info_hat(LengthModel(), p, ENC4)
    )


def test_self_info_depends_on_strings_and_weights_only(generator):
    model = CodecModel()
    p = FiniteProbability(generator.dirichlet(np.ones(16)))
    forward = self_info_hat(model, p, ENC4, b'4')
    # reverse both the labels and the encoding, leaving every (string, weight) pair
    reversed_p = p.permuted(np.arange(16)[::-1])

    class ReversedEncoding(OutcomeEncoding):
        def encode(self, k):
            return super().encode(15 - k)

    backward = self_info_hat(model, reversed_p, ReversedEncoding(4), b'4')
    assert backward == pytest.approx(forward)


def test_mixing_in_noise_lowers_self_info():
    point = FiniteProbability.point_mass(5, 16)
    uniform = FiniteProbability.uniform(16)
    values = [
        self_info_hat(LengthModel(), mixture([point, uniform], [1 - w, w]), ENC4)
        for w in np.linspace(0.0, 1.0, 11)
    ]
    assert values[0] == 4.0
    assert all(np.diff(values) < 0)


CASES = 10_000
MAX_WIDTH = {'length': 4, 'tiny': 4, 'codec': 2}


@pytest.fixture(scope='module')
def tiny_table():
    return enumerate_tiny_machine(12)


@pytest.fixture(
    params=['length', 'tiny', pytest.param('codec', marks=pytest.mark.slow)]
)
def model(request, tiny_table):
    if request.param == 'tiny':
        return TinyMachineModel(tiny_table)
    return make_model(request.param)


def random_probability(gen, width):
    """Dirichlet weights on a random subset of the ``2^width`` outcomes."""
    size = 1 << width
    support = int(gen.integers(1, size + 1))
    weights = np.zeros(size)
    chosen = gen.choice(size, size=support, replace=False)
    weights[chosen] = gen.dirichlet(np.full(support, 0.5))
    return FiniteProbability(weights)


def test_mutual_info_is_symmetric_and_nonnegative(model):
    for case in range(CASES):
        gen = SeededRng(101, (case,)).generator
        enc = OutcomeEncoding(int(gen.integers(1, 9)))
        i, j = (int(k) for k in gen.integers(0, enc.capacity, size=2))
        side = side_string(int(gen.integers(1, 9)))
        forward = mutual_info_hat(model, i, j, enc, side)
        assert forward == mutual_info_hat(model, j, i, enc, side)
        assert forward >= 0.0


def test_self_info_is_nonnegative_on_random_probabilities(model):
    for case in range(CASES):
        gen = SeededRng(102, (case,)).generator
        width = int(gen.integers(0, MAX_WIDTH[model.name] + 1))
        p = random_probability(gen, width)
        enc = OutcomeEncoding(width)
        assert self_info_hat(model, p, enc, side_string(width)) >= 0.0


@pytest.mark.parametrize('name', ['length', 'tiny'])
def test_point_mass_self_info_is_complexity(name, tiny_table):
    model = TinyMachineModel(tiny_table) if name == 'tiny' else make_model(name)
    for case in range(CASES):
        gen = SeededRng(103, (case,)).generator
        enc = OutcomeEncoding(int(gen.integers(0, 9)))
        k = int(gen.integers(0, enc.capacity))
        side = side_string(enc.width)
        p = FiniteProbability.point_mass(k, enc.capacity)
        assert self_info_hat(model, p, enc, side) == k_hat(model, enc.encode(k), side)


def test_length_model_self_info_ignores_labels():
    model = LengthModel()
    for case in range(CASES):
        gen = SeededRng(104, (case,)).generator
        width = int(gen.integers(1, 5))
        p = random_probability(gen, width)
        permuted = p.permuted(gen.permutation(p.size))
        enc = OutcomeEncoding(width)
        assert self_info_hat(model, permuted, enc) == pytest.approx(
            self_info_hat(model, p, enc), rel=1e-12, abs=1e-12
        )
