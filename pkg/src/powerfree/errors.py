"""Exception hierarchy shared by every module."""


class PowerfreeError(Exception):
    pass


class DomainError(PowerfreeError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class WindowError(PowerfreeError):
    """A search window is too small to contain what was asked for."""


class ResourceError(PowerfreeError):
    """An exhaustive enumeration was requested beyond its supported bound."""


class NoAnchor(DomainError):
    """No anchored Thue-Morse factor exists for the requested length."""
