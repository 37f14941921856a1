# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

from collections.abc import Callable, Iterator
from importlib import import_module
from typing import Any

from .errors import ConfigError


class Registry:
    """
    Named factories, resolved lazily.

    An entry is either a callable or a ``'module:attribute'`` string that is
    imported (relative to ``package``) the first time it is requested.

    Parameters
    ----------
    kind:
        What the registry holds, used in error messages.
    defaults:
        The entries restored by :meth:`reset`.
    package:
        Anchor for relative module paths in string entries.
    """

    def __init__(
        self, kind: str, defaults: dict[str, str | Callable], package: str | None = None
    ):
        self._kind = kind
        self._defaults = dict(defaults)
        self._package = package
        self.reset()

    def get(self, name: str) -> Callable:
        """
        The factory registered under ``name``.

        Parameters
        ----------
        name:
            The registered name.
        """
        try:
            entry = self._entries[name]
        except KeyError:
            raise ConfigError(
                f"Unknown {self._kind} '{name}'. Available: {sorted(self._entries)}."
            ) from None
        if isinstance(entry, str):
            module_name, attr = entry.split(':')
            entry = getattr(import_module(module_name, self._package), attr)
            self._entries[name] = entry
        return entry

    def create(self, name: str, *args: Any, **kwargs: Any) -> Any:
        """Call the factory registered under ``name``."""
        return self.get(name)(*args, **kwargs)

    def register(self, name: str, entry: str | Callable) -> None:
        """Add or replace an entry."""
        self._entries[name] = entry

    def reset(self) -> None:
        self._entries = dict(self._defaults)

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self._entries))

    def __getitem__(self, name: str) -> Callable:
        return self.get(name)

    def __setitem__(self, name: str, entry: str | Callable) -> None:
        self.register(name, entry)

    def __repr__(self) -> str:
        return str(self)

    def __str__(self) -> str:
        return f'Registry({self._kind}: {sorted(self._entries)})'


__all__ = ['Registry']
