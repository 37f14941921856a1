# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import lazy_loader as lazy

__getattr__, __dir__, __all__ = lazy.attach(
    __name__,
    submod_attrs={
        'channels': [
            'apply_channel',
            'coarsen_kernel',
            'compose',
            'gaussian_convolve',
            'gaussian_kernel',
            'shannon_entropy',
            'shannon_mutual_information',
        ],
        'io': ['load_kernel', 'load_probability', 'save_kernel', 'save_probability'],
        'probability': [
            'ChannelKernel',
            'FiniteProbability',
            'GridProbability1D',
            'mixture',
        ],
    },
)
