# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import lazy_loader as lazy

__getattr__, __dir__, __all__ = lazy.attach(
    __name__,
    submod_attrs={
        'decoherence': [
            'DecoherenceParams',
            'decohere',
            'environment_decoherence',
            'limit_decohere',
        ],
        'sieves': [
            'pointer_average',
            'sieve_algorithmic',
            'sieve_entropy',
            'sieve_purity',
        ],
    },
)
