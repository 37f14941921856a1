# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

"""JSON encoding of complex arrays as nested lists of ``[re, im]`` pairs."""

import json
from os import PathLike
from typing import Any

import numpy as np
from numpy.typing import ArrayLike

from .errors import ConfigError, DimensionError
from .states import DensityMatrix, PureState


def encode_complex(values: ArrayLike) -> list[Any]:
    """Nested lists of ``[re, im]`` pairs with the shape of ``values``."""
    arr = np.asarray(values, dtype=np.complex128)
    return np.stack([arr.real, arr.imag], axis=-1).tolist()


def decode_complex(data: Any) -> np.ndarray:
    """Inverse of :func:`encode_complex`."""
    arr = np.asarray(data, dtype=np.float64)
    if arr.ndim == 0 or arr.shape[-1] != 2:
        raise DimensionError('Expected [re, im] pairs in the innermost dimension.')
    return arr[..., 0] + 1j * arr[..., 1]


def state_to_json(state: PureState | DensityMatrix) -> str:
    """Serialize a pure state or density matrix."""
    if isinstance(state, PureState):
        payload = {'kind': 'pure', 'amplitudes': encode_complex(state.amplitudes)}
    else:
        payload = {'kind': 'density', 'entries': encode_complex(state.entries)}
    return json.dumps(payload)


def state_from_json(text: str) -> PureState | DensityMatrix:
    """Deserialize the output of :func:`state_to_json`."""
    payload = json.loads(text)
    match payload.get('kind'):
        case 'pure':
            return PureState(decode_complex(payload['amplitudes']))
        case 'density':
            return DensityMatrix(decode_complex(payload['entries']))
        case other:
            raise ConfigError(f'Unknown state kind {other!r}.')


def save_state(state: PureState | DensityMatrix, path: str | PathLike) -> None:
    with open(path, 'w') as f:
        f.write(state_to_json(state))


def load_state(path: str | PathLike) -> PureState | DensityMatrix:
    with open(path) as f:
        return state_from_json(f.read())


__all__ = [
    'decode_complex',
    'encode_complex',
    'load_state',
    'save_state',
    'state_from_json',
    'state_to_json',
]
