# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import lazy_loader as lazy

__getattr__, __dir__, __all__ = lazy.attach(
    __name__,
    submod_attrs={
        'measure': ['collapse', 'measure', 'measure_pure', 'prepare_and_measure'],
        'povm': [
            'BlockPvm',
            'PovmSet',
            'PvmSet',
            'block_pvm',
            'computational_pvm',
            'load_povm',
            'save_povm',
            'validate_povm',
            'validate_pvm',
        ],
    },
)
