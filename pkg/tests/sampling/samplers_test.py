# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import numpy as np
import pytest
from scipy import stats

from qualm.core.errors import BoundViolationError, ConfigError, DimensionError
from qualm.core.operations import purity
from qualm.sampling.laws import MixtureSpec
from qualm.sampling.rng import SeededRng
from qualm.sampling.samplers import (
    biased_prior_sample,
    collapsed_sample,
    haar_pure,
    mixed_state,
    quantile_weight,
    rejection_sample,
)


def first_weights(states):
    return np.array([abs(s.amplitudes[0]) ** 2 for s in states])


def test_haar_states_are_normalized(rng):
    for _ in range(100):
        s = haar_pure(4, rng)
        assert np.linalg.norm(s.amplitudes) == pytest.approx(1.0)


def test_haar_is_reproducible():
    a = haar_pure(3, SeededRng(5, (1,)))
    b = haar_pure(3, SeededRng(5, (1,)))
    assert np.array_equal(a.amplitudes, b.amplitudes)


def test_haar_rejects_zero_qubits(rng):
    with pytest.raises(DimensionError, match='at least one qubit'):
        haar_pure(0, rng)


def test_haar_single_qubit_population_mean(rng):
    weights = first_weights([haar_pure(1, rng) for _ in range(4000)])
    # |a0|^2 is uniform on [0, 1] for one qubit
    assert weights.mean() == pytest.approx(0.5, abs=0.02)


def test_haar_is_unitarily_invariant(rng):
    generator = np.random.default_rng(99)
    z = generator.standard_normal((8, 8)) + 1j * generator.standard_normal((8, 8))
    u, _ = np.linalg.qr(z)
    states = [haar_pure(3, rng) for _ in range(2000)]
    rotated = np.array([abs((u @ s.amplitudes)[0]) ** 2 for s in states])
    result = stats.kstest(rotated, stats.beta(1, 7).cdf)
    assert result.pvalue > 0.001
    result = stats.kstest(first_weights(states), stats.beta(1, 7).cdf)
    assert result.pvalue > 0.001


def test_single_component_mixture_is_pure(rng):
    sigma = mixed_state(3, MixtureSpec(1), rng)
    assert purity(sigma) == pytest.approx(1.0)


def test_many_component_mixture_is_mixed(rng):
    sigma = mixed_state(2, MixtureSpec(6, 'uniform-weights'), rng)
    assert purity(sigma) < 1.0
    assert np.trace(sigma.entries).real == pytest.approx(1.0)


def test_collapsed_sample_outcomes_are_uniform():
    n, c = 4, 2
    counts = np.zeros(2 ** (n - c))
    for trial in range(2000):
        psi, k = collapsed_sample(n, c, SeededRng(3, (trial,)))
        counts[k] += 1
        block = psi.amplitudes.reshape(2 ** (n - c), 2**c)
        assert np.allclose(np.delete(block, k, axis=0), 0)
    assert stats.chisquare(counts).pvalue > 0.001


def test_rejection_sampling_acceptance_rate():
    weight = quantile_weight(3, 1.0, 0.5)
    attempts = [
        rejection_sample(3, 1.0, weight, SeededRng(8, (trial,)))[1]
        for trial in range(2000)
    ]
    # acceptance probability is 1 - q
    assert 1 / np.mean(attempts) == pytest.approx(0.5, abs=0.04)


def test_quantile_weight_favours_large_first_amplitude():
    weight = quantile_weight(3, 1.0, 0.5)
    states = [
        biased_prior_sample(3, 1.0, weight, SeededRng(2, (t,))) for t in range(200)
    ]
    threshold = stats.beta(1, 7).ppf(0.5)
    assert np.all(first_weights(states) > threshold)


def test_weight_above_bound_raises(rng):
    with pytest.raises(BoundViolationError, match='outside'):
        rejection_sample(2, 2.0, lambda psi: 2.0**2 + 0.1, rng)


def test_negative_weight_raises(rng):
    with pytest.raises(BoundViolationError):
        rejection_sample(2, 1.0, lambda psi: -0.5, rng)


def test_zero_weight_gives_up(rng):
    with pytest.raises(BoundViolationError, match='No state accepted'):
        rejection_sample(2, 1.0, lambda psi: 0.0, rng, max_attempts=50)


def test_quantile_outside_range():
    with pytest.raises(ConfigError, match='Quantile'):
        quantile_weight(3, 1.0, 1.0)
