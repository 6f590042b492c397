from __future__ import annotations


class NetconsentError(ValueError):
    """Base class for every error raised by the library."""


class DomainError(NetconsentError):
    """Player, link, or value outside its domain."""


class PreconditionError(NetconsentError):
    pass


class CapacityError(NetconsentError):
    """Enumeration would exceed a configured cap."""


class ModelFileError(NetconsentError):
    """Model, game, or device file does not match its schema."""


class DeviceError(ModelFileError):
    pass


class InvariantError(NetconsentError):
    """A computed result contradicts an implication that must always hold."""
