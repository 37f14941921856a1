# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

from dataclasses import dataclass

import numpy as np

from ..classical.probability import FiniteProbability
from ..core.errors import ConfigError
from ..core.operations import diagonal_probability, interference_density
from ..core.states import DensityMatrix, PureState


@dataclass(frozen=True)
class DecoherenceParams:
    """
    Decoherence in the computational (pointer) basis with time constant ``tau``.

    Parameters
    ----------
    tau:
        Decay time of the environment overlap, positive.
    """

    tau: float = 1.0

    def __post_init__(self) -> None:
        if not self.tau > 0:
            raise ConfigError(f'Decoherence time must be positive, got tau={self.tau}.')

    @property
    def pointer_basis(self) -> str:
        return 'computational'

    def overlap(self, t: float) -> float:
        """The environment overlap ``exp(-t / tau)`` at time ``t``."""
        if t < 0:
            raise ConfigError(f'Time must be nonnegative, got t={t}.')
        if np.isinf(t):
            return 0.0
        return float(np.exp(-t / self.tau))


def decohere(
    rho: DensityMatrix, t: float, params: DecoherenceParams | None = None
) -> DensityMatrix:
    """
    Damp every off-diagonal entry of ``rho`` by ``exp(-t / tau)``.

    The diagonal is left untouched, bit for bit. ``t = inf`` removes all
    coherences.

    Parameters
    ----------
    rho:
        The density matrix.
    t:
        Interaction time, nonnegative.
    params:
        The decoherence time constant.
    """
    params = params or DecoherenceParams()
    factor = params.overlap(t)
    entries = rho.entries * factor
    np.fill_diagonal(entries, np.diagonal(rho.entries))
    return DensityMatrix(entries)


def limit_decohere(s: PureState) -> FiniteProbability:
    """The pointer-basis probability a pure state decoheres to as ``t -> inf``."""
    return diagonal_probability(s)


def environment_decoherence(
    psi1: PureState,
    psi2: PureState,
    t: float,
    params: DecoherenceParams | None = None,
) -> DensityMatrix:
    """
    Reduced state of the superposition of ``psi1`` and ``psi2`` after an environment
    has interacted with it for time ``t``, with record overlap ``exp(-t / tau)``.

    Parameters
    ----------
    psi1, psi2:
        The two branches.
    t:
        Interaction time, nonnegative.
    params:
        The decoherence time constant.
    """
    params = params or DecoherenceParams()
    return interference_density(psi1, psi2, params.overlap(t))
