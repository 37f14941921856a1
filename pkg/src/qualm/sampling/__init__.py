# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

"""Seeded samplers for Haar, mixed, collapsed and biased ensembles of states."""

import lazy_loader as lazy

__getattr__, __dir__, __all__ = lazy.attach(
    __name__,
    submod_attrs={
        'laws': ['MixtureSpec', 'parse_mixture', 'simplex_laws'],
        'rng': ['SeededRng'],
        'samplers': [
            'biased_prior_sample',
            'collapsed_sample',
            'haar_pure',
            'mixed_state',
            'quantile_weight',
            'rejection_sample',
        ],
    },
)
