# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2025 Qualm contributors

"""Exceptions raised when an input violates a state, measurement or config invariant."""


class QualmError(ValueError):
    """Base class of all invariant violations raised by qualm."""


class DimensionError(QualmError):
    """Shapes or Hilbert-space dimensions do not agree."""


class NotHermitianError(QualmError):
    """A matrix differs from its conjugate transpose beyond tolerance."""


class NotPositiveError(QualmError):
    """A matrix has an eigenvalue (or a weight) below the negative tolerance."""


class NotNormalizedError(QualmError):
    """A state norm, trace or probability total differs from one."""


class IncompleteMeasurementError(QualmError):
    """Measurement elements do not sum to the identity."""


class NotProjectiveError(QualmError):
    """Measurement elements are not mutually orthogonal projectors."""


class ZeroProbabilityError(QualmError):
    """A collapse was requested onto an outcome that cannot occur."""


class BoundViolationError(QualmError):
    """A rejection-sampling weight exceeds its declared bound."""


class NumericError(QualmError):
    """A numerical routine failed or produced values outside tolerance."""


class ConfigError(QualmError):
    """An experiment configuration is invalid."""


__all__ = [
    'BoundViolationError',
    'ConfigError',
    'DimensionError',
    'IncompleteMeasurementError',
    'NotHermitianError',
    'NotNormalizedError',
    'NotPositiveError',
    'NotProjectiveError',
    'NumericError',
    'QualmError',
    'ZeroProbabilityError',
]
