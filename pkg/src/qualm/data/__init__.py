# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

from .factory import (
    basis_state,
    bell_pair,
    ghz_state,
    maximally_mixed,
    named_state,
    plus_state,
    sparse_probability,
)

__all__ = [
    'basis_state',
    'bell_pair',
    'ghz_state',
    'maximally_mixed',
    'named_state',
    'plus_state',
    'sparse_probability',
]
