# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

from collections.abc import Sequence

import numpy as np

from ..classical.probability import ChannelKernel, FiniteProbability
from ..core.errors import (
    DimensionError,
    NotProjectiveError,
    NumericError,
    ZeroProbabilityError,
)
from ..core.states import ATOL, DensityMatrix, PureState
from .povm import PovmSet, PvmSet

MIN_COLLAPSE_PROBABILITY = 1e-12


def _check_dims(dim: int, povm: PovmSet) -> None:
    if dim != povm.dim:
        raise DimensionError(
            f'State dimension {dim} does not match measurement dimension {povm.dim}.'
        )


def _to_probability(traces: np.ndarray) -> FiniteProbability:
    leak = np.max(np.abs(traces.imag))
    if leak > ATOL:
        raise NumericError(f'Measurement traces have imaginary part {leak:.3e}.')
    return FiniteProbability.from_unnormalized(traces.real)


def measure(sigma: DensityMatrix, E: PovmSet) -> FiniteProbability:
    """
    The outcome probability ``p(k) = Tr(E_k sigma)``.

    Parameters
    ----------
    sigma:
        The measured state.
    E:
        The measurement.
    """
    _check_dims(sigma.dim, E)
    return _to_probability(E.traces(sigma.entries))


def measure_pure(s: PureState, E: PovmSet) -> FiniteProbability:
    """The outcome probability ``p(k) = <psi|E_k|psi>`` of a pure state."""
    _check_dims(s.dim, E)
    return _to_probability(E.pure_traces(s.amplitudes))


def collapse(s: PureState, F: PvmSet, k: int) -> PureState:
    """
    The post-measurement state ``F_k|psi> / ||F_k|psi>||``.

    Parameters
    ----------
    s:
        The state before measurement.
    F:
        A projective measurement.
    k:
        The observed outcome.

    Raises
    ------
    ZeroProbabilityError
        If outcome ``k`` has probability at most ``1e-12``.
    """
    if not isinstance(F, PvmSet):
        raise NotProjectiveError(
            'Collapse is only defined for projective measurements.'
        )
    _check_dims(s.dim, F)
    if not 0 <= k < F.outcome_count:
        raise DimensionError(
            f'Outcome {k} out of range for {F.outcome_count} outcomes.'
        )
    probability = F.pure_traces(s.amplitudes)[k].real
    if probability <= MIN_COLLAPSE_PROBABILITY:
        raise ZeroProbabilityError(
            f'Outcome {k} has probability {probability:.3e}; cannot collapse onto it.'
        )
    projected = F.project(k, s.amplitudes)
    return PureState(projected / np.linalg.norm(projected))


def prepare_and_measure(
    states: Sequence[DensityMatrix], E: PovmSet
) -> ChannelKernel:
    """
    The classical channel ``f(k|i) = Tr(E_k rho_i)`` of preparing ``rho_i`` and
    measuring ``E``.

    Parameters
    ----------
    states:
        The prepared states, indexed by channel input.
    E:
        The measurement, whose outcomes are the channel outputs.
    """
    if len(states) == 0:
        raise DimensionError('Need at least one prepared state.')
    return ChannelKernel.from_rows([measure(rho, E) for rho in states])
