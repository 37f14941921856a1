# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

"""Seeded Monte Carlo experiments and their reports."""

import lazy_loader as lazy

__getattr__, __dir__, __all__ = lazy.attach(
    __name__,
    submodules=['cli'],
    submod_attrs={
        'biased_prior': ['exp_biased_prior'],
        'catalog': ['experiments', 'run_experiment'],
        'collapse': ['exp_collapse_uptake'],
        'config': ['ExperimentConfig', 'load_config', 'parse_int_range'],
        'conservation': ['exp_channel_conservation'],
        'report': [
            'Report',
            'ReportRow',
            'SCHEMA_VERSION',
            'read_csv',
            'read_json',
            'to_data_array',
        ],
        'runner': ['Summary', 'map_trials', 'summarize'],
        'trajectory': ['exp_pointer_average', 'exp_sieve_trajectory'],
        'white_noise': [
            'exp_white_noise_mixed',
            'exp_white_noise_pure',
            'measured_self_info',
        ],
    },
)
