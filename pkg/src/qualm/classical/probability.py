# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence

import numpy as np
from numpy.typing import ArrayLike

from ..core.errors import DimensionError, NotNormalizedError, NotPositiveError

ATOL = 1e-9
PRUNE_BELOW = 1e-15
# Totals this close to one are rounding noise and are not divided out.
ROUNDING = 1e-12


def _readonly(values: np.ndarray) -> np.ndarray:
    values.flags.writeable = False
    return values


def _check_weights(weights: np.ndarray, what: str) -> np.ndarray:
    if weights.ndim != 1 or weights.size == 0:
        raise DimensionError(
            f'{what} must be a non-empty one-dimensional vector, got shape '
            f'{weights.shape}.'
        )
    if not np.all(np.isfinite(weights)):
        raise NotNormalizedError(f'{what} contains non-finite weights.')
    lowest = weights.min()
    if lowest < -ATOL:
        raise NotPositiveError(f'{what} has a negative weight {lowest:.3e}.')
    total = weights.sum()
    if abs(total - 1.0) > ATOL:
        raise NotNormalizedError(f'{what} sums to {total!r}, expected 1.')
    return np.clip(weights, 0.0, None)


class FiniteProbability:
    """
    Nonnegative weights over the outcome indices ``0 .. size-1`` summing to one.

    Outcomes outside the support simply carry weight zero, so a probability with a
    sparse support is stored as a dense vector of its full outcome range.

    Parameters
    ----------
    weights:
        The weight of each outcome index.
    """

    __slots__ = ('_weights',)

    def __init__(self, weights: ArrayLike) -> None:
        values = np.array(weights, dtype=np.float64, copy=True)
        self._weights = _readonly(_check_weights(values, 'Probability'))

    @classmethod
    def from_unnormalized(
        cls, values: ArrayLike, *, prune_below: float = 0.0
    ) -> FiniteProbability:
        """
        Build a probability from weights that are only approximately valid.

        Weights within ``[-1e-9, 0)`` are clipped to zero, weights below
        ``prune_below`` are dropped, and the result is renormalized unless its total
        is one up to rounding.

        Parameters
        ----------
        values:
            Raw weights, e.g. traces of measurement operators.
        prune_below:
            Weights strictly below this threshold are set to zero.
        """
        raw = np.array(values, dtype=np.float64, copy=True)
        if raw.ndim != 1 or raw.size == 0:
            raise DimensionError(f'Expected a non-empty vector, got shape {raw.shape}.')
        lowest = raw.min()
        if lowest < -ATOL:
            raise NotPositiveError(f'Probability has a negative weight {lowest:.3e}.')
        raw = np.clip(raw, 0.0, None)
        if prune_below > 0.0:
            raw[raw < prune_below] = 0.0
        total = raw.sum()
        if total <= 0.0:
            raise NotNormalizedError('All weights vanish, cannot normalize.')
        if abs(total - 1.0) > ROUNDING:
            raw /= total
        return cls(raw)

    @classmethod
    def from_mapping(
        cls, weights: Mapping[int, float], size: int | None = None
    ) -> FiniteProbability:
        """
        Build a probability from an ``{index: weight}`` mapping.

        Parameters
        ----------
        weights:
            Weights of the support indices.
        size:
            Number of outcomes. Defaults to one past the largest index.
        """
        if not weights:
            raise DimensionError('A probability needs at least one outcome.')
        if min(weights) < 0:
            raise DimensionError('Outcome indices must be nonnegative.')
        if size is None:
            size = max(weights) + 1
        if max(weights) >= size:
            raise DimensionError(
                f'Outcome index {max(weights)} is outside the range of {size} outcomes.'
            )
        dense = np.zeros(size)
        for index, weight in weights.items():
            dense[index] = weight
        return cls(dense)

    @classmethod
    def point_mass(cls, index: int, size: int) -> FiniteProbability:
        """All weight on a single outcome."""
        return cls.from_mapping({index: 1.0}, size=size)

    @classmethod
    def uniform(cls, size: int) -> FiniteProbability:
        """Equal weight on every outcome."""
        return cls(np.full(size, 1.0 / size))

    @property
    def weights(self) -> np.ndarray:
        """Read-only vector of weights indexed by outcome."""
        return self._weights

    @property
    def size(self) -> int:
        """Number of outcomes, including those with zero weight."""
        return self._weights.size

    def support(self) -> np.ndarray:
        """Indices of the outcomes with nonzero weight, in increasing order."""
        return np.flatnonzero(self._weights > 0.0)

    def as_dict(self) -> dict[int, float]:
        """The support as an ``{index: weight}`` mapping."""
        return {int(i): float(self._weights[i]) for i in self.support()}

    def permuted(self, permutation: Sequence[int]) -> FiniteProbability:
        """
        Relabel outcomes: the weight of outcome ``i`` moves to ``permutation[i]``.

        Parameters
        ----------
        permutation:
            A permutation of ``range(size)``.
        """
        perm = np.asarray(permutation)
        if sorted(perm.tolist()) != list(range(self.size)):
            raise DimensionError('Expected a permutation of all outcome indices.')
        out = np.empty_like(self._weights)
        out[perm] = self._weights
        return FiniteProbability(out)

    def __getitem__(self, index: int) -> float:
        return float(self._weights[index])

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f'FiniteProbability(size={self.size}, support={self.as_dict()})'


def mixture(
    components: Iterable[FiniteProbability], coefficients: Iterable[float]
) -> FiniteProbability:
    """
    Convex combination of probabilities over the same outcome range.

    Parameters
    ----------
    components:
        The probabilities to mix.
    coefficients:
        Mixing weights, nonnegative and summing to one.
    """
    parts = list(components)
    coeffs = list(coefficients)
    if len(parts) != len(coeffs):
        raise DimensionError('Need one coefficient per component.')
    sizes = {p.size for p in parts}
    if len(sizes) != 1:
        raise DimensionError(f'Components have different sizes {sorted(sizes)}.')
    _check_weights(np.asarray(coeffs, dtype=np.float64), 'Mixture coefficients')
    total = sum(a * p.weights for a, p in zip(coeffs, parts, strict=True))
    return FiniteProbability.from_unnormalized(total)


class ChannelKernel:
    """
    A classical channel ``f(x|z)``: one output probability per input index.

    Parameters
    ----------
    matrix:
        Row ``z`` holds the output weights ``f(.|z)``.
    """

    __slots__ = ('_matrix',)

    def __init__(self, matrix: ArrayLike) -> None:
        values = np.array(matrix, dtype=np.float64, copy=True)
        if values.ndim != 2 or 0 in values.shape:
            raise DimensionError(
                f'A channel kernel needs a non-empty 2d matrix, got shape '
                f'{values.shape}.'
            )
        for z, row in enumerate(values):
            values[z] = _check_weights(row, f'Kernel row {z}')
        self._matrix = _readonly(values)

    @classmethod
    def from_rows(cls, rows: Iterable[FiniteProbability]) -> ChannelKernel:
        """Stack output probabilities, the ``z``-th being ``f(.|z)``."""
        rows = list(rows)
        sizes = {row.size for row in rows}
        if len(sizes) != 1:
            raise DimensionError(f'Kernel rows have different sizes {sorted(sizes)}.')
        return cls(np.stack([row.weights for row in rows]))

    @classmethod
    def identity(cls, size: int) -> ChannelKernel:
        """The noiseless channel on ``size`` symbols."""
        return cls(np.eye(size))

    @classmethod
    def constant(cls, output: FiniteProbability, inputs: int) -> ChannelKernel:
        """A channel that ignores its input and always emits ``output``."""
        return cls(np.tile(output.weights, (inputs, 1)))

    @property
    def matrix(self) -> np.ndarray:
        """Read-only ``(inputs, outputs)`` matrix of transition weights."""
        return self._matrix

    @property
    def input_count(self) -> int:
        return self._matrix.shape[0]

    @property
    def output_count(self) -> int:
        return self._matrix.shape[1]

    @property
    def rows(self) -> dict[int, FiniteProbability]:
        """The output probability of every input index."""
        return {z: FiniteProbability(row) for z, row in enumerate(self._matrix)}

    def __repr__(self) -> str:
        return f'ChannelKernel(inputs={self.input_count}, outputs={self.output_count})'


class GridProbability1D:
    """
    A probability over the cells of a regular one-dimensional grid.

    Cell ``i`` sits at position ``origin + i * spacing``.

    Parameters
    ----------
    origin:
        Position of the first cell.
    spacing:
        Distance between neighbouring cells.
    weights:
        Weight of each cell.
    """

    __slots__ = ('_origin', '_spacing', '_weights')

    def __init__(self, origin: float, spacing: float, weights: ArrayLike) -> None:
        if not spacing > 0:
            raise DimensionError(f'Grid spacing must be positive, got {spacing}.')
        self._origin = float(origin)
        self._spacing = float(spacing)
        values = np.array(weights, dtype=np.float64, copy=True)
        self._weights = _readonly(_check_weights(values, 'Grid probability'))

    @property
    def origin(self) -> float:
        return self._origin

    @property
    def spacing(self) -> float:
        return self._spacing

    @property
    def weights(self) -> np.ndarray:
        return self._weights

    @property
    def positions(self) -> np.ndarray:
        """Cell positions."""
        return self._origin + self._spacing * np.arange(self._weights.size)

    def mean(self) -> float:
        return float(np.dot(self.positions, self._weights))

    def variance(self) -> float:
        return float(np.dot((self.positions - self.mean()) ** 2, self._weights))

    def as_finite(self) -> FiniteProbability:
        """The same weights, labelled by cell index."""
        return FiniteProbability(self._weights)

    def __repr__(self) -> str:
        return (
            f'GridProbability1D(origin={self._origin}, spacing={self._spacing}, '
            f'cells={self._weights.size})'
        )


__all__ = [
    'ATOL',
    'PRUNE_BELOW',
    'ChannelKernel',
    'FiniteProbability',
    'GridProbability1D',
    'mixture',
]
