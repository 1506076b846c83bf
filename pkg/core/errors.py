"""Exception hierarchy shared by the library and the CLI."""


class DerivPolyError(Exception):
    """Base class for every error raised by the package"""


class DomainError(DerivPolyError, ValueError):
    """Argument outside the domain of an operation"""


class SingularityError(DomainError):
    """Evaluation point too close to a pole"""


class ConsistencyError(DerivPolyError):
    """A computed value failed an internal consistency check"""


class ConfigurationError(DerivPolyError):
    """Unsupported combination of operator and ring"""
