# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import numpy as np
import pytest

from qualm.core.errors import DimensionError
from qualm.core.states import PureState
from qualm.data import plus_state
from qualm.estimators.models import LengthModel, TinyMachineModel, ZeroModel
from qualm.estimators.tiny_machine import enumerate_tiny_machine
from qualm.sampling import SeededRng, haar_pure
from qualm.sieve.sieves import (
    pointer_average,
    sieve_algorithmic,
    sieve_entropy,
    sieve_purity,
)

T_GRID = np.arange(17) / 4


def binary_entropy(p):
    return -p * np.log2(p) - (1 - p) * np.log2(1 - p)


def test_plus_state_closed_forms():
    s = plus_state(1)
    assert sieve_purity(s, 0.0) == pytest.approx(1.0)
    assert sieve_purity(s, 1.0) == pytest.approx(0.5 * (1 + np.exp(-2)))
    assert sieve_purity(s, 1.0) == pytest.approx(0.56767, abs=1e-4)
    assert sieve_purity(s, np.inf) == pytest.approx(0.5)
    assert sieve_entropy(s, 0.0) == pytest.approx(0.0, abs=1e-9)
    assert sieve_entropy(s, 1.0) == pytest.approx(
        binary_entropy(0.5 * (1 - np.exp(-1)))
    )
    assert sieve_entropy(s, 1.0) == pytest.approx(0.90002, abs=1e-4)
    assert sieve_entropy(s, np.inf) == pytest.approx(1.0)


def test_sieves_are_monotone_for_haar_states():
    for trial in range(200):
        s = haar_pure(4, SeededRng(17, (trial,)))
        purities = [sieve_purity(s, t) for t in T_GRID]
        entropies = [sieve_entropy(s, t) for t in T_GRID]
        assert purities[0] == pytest.approx(1.0)
        assert entropies[0] == pytest.approx(0.0, abs=1e-9)
        assert np.all(np.diff(purities) <= 1e-12)
        assert np.all(np.diff(entropies) >= -1e-9)


def test_sieve_algorithmic_of_pointer_state():
    for k in (0, 5, 15):
        assert sieve_algorithmic(PureState.basis(4, k), LengthModel()) == 4.0


def test_sieve_algorithmic_of_plus_state():
    value = sieve_algorithmic(plus_state(4), LengthModel())
    assert value == pytest.approx(0.95419, abs=1e-5)


def test_sieve_algorithmic_zero_model():
    assert sieve_algorithmic(haar_pure(3, SeededRng(0)), ZeroModel()) == 0.0


@pytest.mark.parametrize('n', range(2, 11))
def test_pointer_average_length_model_is_n(n):
    assert pointer_average(n, LengthModel()) == n


def test_pointer_average_zero_model():
    assert pointer_average(3, ZeroModel()) == 0.0


def test_pointer_average_tiny_machine():
    table = enumerate_tiny_machine(12)
    model = TinyMachineModel(table)
    values = [table.complexity(format(k, '04b').encode()) for k in range(16)]
    assert None not in values
    expected = np.mean(values)
    assert pointer_average(4, model) == pytest.approx(expected)


@pytest.mark.parametrize('n', [0, 13])
def test_pointer_average_range(n):
    with pytest.raises(DimensionError, match='Pointer averages'):
        pointer_average(n, LengthModel())
