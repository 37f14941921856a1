# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors
# ruff: noqa: RUF100, E402, F401, I

import importlib.metadata

try:
    __version__ = importlib.metadata.version(__package__ or __name__)
except importlib.metadata.PackageNotFoundError:
    __version__ = "0.0.0"


import lazy_loader as lazy

__getattr__, __dir__, __all__ = lazy.attach(
    __name__,
    submodules=['classical', 'data', 'estimators', 'experiments', 'sampling'],
    submod_attrs={
        'core': [
            'DensityMatrix',
            'JointState',
            'PureState',
            'diagonal_probability',
            'outer_product',
            'partial_trace_env',
            'purity',
            'von_neumann_entropy',
        ],
        'measurement': [
            'block_pvm',
            'collapse',
            'computational_pvm',
            'measure',
            'measure_pure',
            'validate_povm',
            'validate_pvm',
        ],
        'sieve': [
            'DecoherenceParams',
            'decohere',
            'limit_decohere',
            'pointer_average',
            'sieve_algorithmic',
            'sieve_entropy',
            'sieve_purity',
        ],
    },
)

del importlib
