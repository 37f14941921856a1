# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

"""CSV exchange of probabilities, as ``(index, weight)``, and kernels, as
``(in_index, out_index, weight)`` rows."""

from os import PathLike

import numpy as np
import pandas as pd

from .probability import ChannelKernel, FiniteProbability


def save_probability(p: FiniteProbability, path: str | PathLike) -> None:
    """Write the support of ``p`` as ``index,weight`` rows."""
    support = p.support()
    pd.DataFrame({'index': support, 'weight': p.weights[support]}).to_csv(
        path, index=False
    )


def load_probability(
    path: str | PathLike, size: int | None = None
) -> FiniteProbability:
    """
    Read ``index,weight`` rows into a probability.

    Parameters
    ----------
    path:
        The CSV file.
    size:
        Number of outcomes. Defaults to one past the largest index in the file.
    """
    table = pd.read_csv(path)
    return FiniteProbability.from_mapping(
        dict(zip(table['index'].astype(int), table['weight'], strict=True)), size=size
    )


def save_kernel(f: ChannelKernel, path: str | PathLike) -> None:
    """Write the nonzero transitions of ``f`` as ``in_index,out_index,weight`` rows."""
    rows, cols = np.nonzero(f.matrix)
    pd.DataFrame(
        {'in_index': rows, 'out_index': cols, 'weight': f.matrix[rows, cols]}
    ).to_csv(path, index=False)


def load_kernel(
    path: str | PathLike, inputs: int | None = None, outputs: int | None = None
) -> ChannelKernel:
    """
    Read ``in_index,out_index,weight`` rows into a kernel.

    Parameters
    ----------
    path:
        The CSV file.
    inputs:
        Number of inputs. Defaults to one past the largest input index.
    outputs:
        Number of outputs. Defaults to one past the largest output index.
    """
    table = pd.read_csv(path)
    rows = table['in_index'].to_numpy(dtype=int)
    cols = table['out_index'].to_numpy(dtype=int)
    matrix = np.zeros(
        (
            inputs if inputs is not None else rows.max() + 1,
            outputs if outputs is not None else cols.max() + 1,
        )
    )
    matrix[rows, cols] = table['weight'].to_numpy(dtype=float)
    return ChannelKernel(matrix)
