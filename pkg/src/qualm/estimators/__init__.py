# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

"""Computable complexity models and the information estimators built on them."""

import lazy_loader as lazy

__getattr__, __dir__, __all__ = lazy.attach(
    __name__,
    submod_attrs={
        'encoding': ['OutcomeEncoding', 'side_string'],
        'information': [
            'k_hat',
            'mutual_info_hat',
            'mutual_info_matrix',
            'self_info_hat',
        ],
        'models': [
            'CodecModel',
            'ComplexityModel',
            'LengthModel',
            'TinyMachineModel',
            'ZeroModel',
            'bit_length',
            'make_model',
            'models',
        ],
        'tiny_machine': [
            'TinyMachineTable',
            'cached_table',
            'enumerate_tiny_machine',
            'load_table',
            'save_table',
        ],
    },
)
