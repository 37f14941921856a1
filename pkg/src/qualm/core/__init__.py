# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

import lazy_loader as lazy

__getattr__, __dir__, __all__ = lazy.attach(
    __name__,
    submodules=['errors'],
    submod_attrs={
        'io': [
            'decode_complex',
            'encode_complex',
            'load_state',
            'save_state',
            'state_from_json',
            'state_to_json',
        ],
        'operations': [
            'diagonal_probability',
            'entangled_pair',
            'environment_records',
            'interference_density',
            'outer_product',
            'partial_trace_env',
            'product_state',
            'purity',
            'von_neumann_entropy',
        ],
        'registry': ['Registry'],
        'states': ['DensityMatrix', 'JointState', 'PureState', 'qubits_for_dimension'],
    },
)
