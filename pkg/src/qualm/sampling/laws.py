# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

"""Laws ``eta`` on the ``M``-simplex, used to weight the components of mixed states."""

from dataclasses import dataclass, field

import numpy as np

from ..core.errors import ConfigError
from ..core.registry import Registry


def dirichlet(m: int, generator: np.random.Generator, alpha: float = 1.0) -> np.ndarray:
    """Symmetric Dirichlet weights; ``alpha = 1`` is uniform on the simplex."""
    return generator.dirichlet(np.full(m, float(alpha)))


def uniform_weights(m: int, generator: np.random.Generator) -> np.ndarray:
    """The centre of the simplex, ``1/M`` each."""
    return np.full(m, 1.0 / m)


def vertex(m: int, generator: np.random.Generator) -> np.ndarray:
    """A uniformly chosen vertex: all weight on one component."""
    out = np.zeros(m)
    out[generator.integers(m)] = 1.0
    return out


simplex_laws = Registry(
    'simplex law',
    {
        'dirichlet': dirichlet,
        'uniform-weights': uniform_weights,
        'vertex': vertex,
    },
)


@dataclass(frozen=True)
class MixtureSpec:
    """
    How mixed states are drawn: ``M`` Haar components weighted by a simplex law.

    Parameters
    ----------
    component_count:
        Number of components ``M``.
    simplex_law:
        Name of a law registered in :data:`simplex_laws`.
    law_params:
        Keyword arguments of the law, e.g. ``{'alpha': 0.5}`` for ``dirichlet``.
    """

    component_count: int = 1
    simplex_law: str = 'dirichlet'
    law_params: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.component_count < 1:
            raise ConfigError(
                f'A mixture needs at least one component, got {self.component_count}.'
            )
        if self.simplex_law not in simplex_laws:
            raise ConfigError(
                f"Unknown simplex law '{self.simplex_law}'. "
                f'Available: {list(simplex_laws)}.'
            )

    def draw_weights(self, generator: np.random.Generator) -> np.ndarray:
        return simplex_laws.create(
            self.simplex_law, self.component_count, generator, **self.law_params
        )

    def describe(self) -> str:
        params = ','.join(f'{k}={v}' for k, v in sorted(self.law_params.items()))
        law = f'{self.simplex_law}({params})' if params else self.simplex_law
        return f'{law}x{self.component_count}'


def parse_mixture(text: str, component_count: int = 1) -> MixtureSpec:
    """
    Parse ``'law'`` or ``'law:key=value,...'``, e.g. ``'dirichlet:alpha=0.5'``.

    Parameters
    ----------
    text:
        The law description.
    component_count:
        Number of components ``M``.
    """
    name, _, rest = text.partition(':')
    params = {}
    for item in filter(None, rest.split(',')):
        key, sep, value = item.partition('=')
        if not sep:
            raise ConfigError(f"Cannot parse simplex law parameter '{item}'.")
        params[key.strip()] = float(value)
    return MixtureSpec(component_count, name.strip(), params)
