"""Exception types shared across the package."""


class QvdpError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(QvdpError):
    """Invalid physical parameters, Fock dimension, or scenario config."""


class DimensionMismatchError(QvdpError):
    """Operators of different Fock dimensions were combined."""


class PureGainError(QvdpError):
    """No normalizable steady state: linear gain without saturating loss."""


class DegenerateSteadyStateError(QvdpError):
    """The Liouvillian null space is not one-dimensional."""


class StiffnessError(QvdpError):
    """Time propagation failed; suggests a larger dim or direct expm."""


class DimensionCapError(ConfigError):
    """Adaptive truncation exceeded the configured hard cap."""


class NotApplicableError(QvdpError):
    """A closed-form expression was requested outside its derivation regime."""


class DistortionBoundError(QvdpError):
    """Requested limit-cycle distortion is above the attainable bound."""
