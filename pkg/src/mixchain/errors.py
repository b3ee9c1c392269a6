"""Exception hierarchy shared across the package."""


class MixchainError(Exception):
    """Base class for all package-specific errors."""


class DomainError(MixchainError, ValueError):
    """An argument is outside the documented domain of an operation."""


class UnsupportedFamilyError(MixchainError, ValueError):
    """The mixture family lacks what this operation needs (moments, samplers, ...)."""


class CorruptDatasetError(MixchainError, ValueError):
    """Cached dataset quantities are inconsistent or non-positive."""


class DegenerateProposalError(MixchainError, ValueError):
    """A quasi-posterior proposal cannot be built (matching moments coincide)."""


class UnboundedRatioError(MixchainError, RuntimeError):
    """Target/proposal density ratio is unbounded on the diagnostic grid."""


class NumericalFailureError(MixchainError, RuntimeError):
    """A numerical quantity that must be finite was not."""


class ConfigError(MixchainError, ValueError):
    """Malformed experiment configuration (names the key and line)."""
