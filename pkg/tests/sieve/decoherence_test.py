# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import numpy as np
import pytest

from qualm.core.errors import ConfigError
from qualm.core.operations import outer_product
from qualm.core.states import PureState
from qualm.data import plus_state
from qualm.sampling import SeededRng, haar_pure
from qualm.sieve.decoherence import (
    DecoherenceParams,
    decohere,
    environment_decoherence,
    limit_decohere,
)


@pytest.fixture
def rho():
    return outer_product(haar_pure(3, SeededRng(21)))


def off_diagonal(matrix):
    return matrix[~np.eye(matrix.shape[0], dtype=bool)]


def test_zero_time_is_identity(rho):
    assert np.array_equal(decohere(rho, 0.0).entries, rho.entries)


def test_ln2_halves_coherences(rho):
    params = DecoherenceParams(tau=2.0)
    out = decohere(rho, 2.0 * np.log(2), params)
    assert np.allclose(off_diagonal(out.entries), off_diagonal(rho.entries) / 2)


def test_diagonal_is_bit_identical(rho):
    for t in (0.3, 5.0, np.inf):
        assert np.array_equal(
            np.diagonal(decohere(rho, t).entries), np.diagonal(rho.entries)
        )


def test_infinite_time_removes_coherences(rho):
    out = decohere(rho, np.inf)
    assert not off_diagonal(out.entries).any()


def test_semigroup(rho):
    params = DecoherenceParams(tau=0.7)
    twice = decohere(decohere(rho, 0.4, params), 1.1, params)
    once = decohere(rho, 1.5, params)
    assert np.allclose(twice.entries, once.entries, rtol=0, atol=1e-12)


def test_negative_time_is_rejected(rho):
    with pytest.raises(ConfigError, match='nonnegative'):
        decohere(rho, -1.0)


def test_tau_must_be_positive():
    with pytest.raises(ConfigError, match='positive'):
        DecoherenceParams(tau=0.0)


def test_pointer_basis_is_computational():
    assert DecoherenceParams().pointer_basis == 'computational'


def test_limit_decohere_is_diagonal():
    s = haar_pure(3, SeededRng(8))
    p = limit_decohere(s)
    assert np.allclose(p.weights, np.diagonal(decohere(outer_product(s), 4.0).entries))
    assert limit_decohere(PureState.basis(2, 0)).as_dict() == {0: 1.0}
    assert np.allclose(limit_decohere(plus_state(3)).weights, 1 / 8)


@pytest.mark.parametrize('t', [0.0, 0.5, 2.0, np.inf])
def test_environment_model_matches_decohere_on_plus(t):
    psi1 = PureState.basis(1, 0)
    psi2 = PureState.basis(1, 1)
    expected = decohere(outer_product(plus_state(1)), t)
    assert np.allclose(environment_decoherence(psi1, psi2, t).entries, expected.entries)


def test_equal_superposition_becomes_mixture():
    psi1 = haar_pure(2, SeededRng(1))
    psi2 = haar_pure(2, SeededRng(2))
    out = environment_decoherence(psi1, psi2, np.inf)
    expected = (outer_product(psi1).entries + outer_product(psi2).entries) / 2
    assert np.allclose(out.entries, expected)
