"""Exception taxonomy. Everything raised by the library derives from SelbergLiError."""


class SelbergLiError(Exception):
    """Base class for all library errors."""


class DomainError(SelbergLiError, ValueError):
    """Argument outside the supported domain (z <= 0, q <= 0, ...)."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole (Gamma at -k, zeta at s=1)."""


class EscalationExhaustedError(SelbergLiError, ArithmeticError):
    """An adaptive computation failed to converge within the escalation budget."""


class CapacityError(SelbergLiError, ValueError):
    """Request exceeds a configured capacity limit (sieve size, eta index, ...)."""


class QuadratureError(SelbergLiError, ArithmeticError):
    """Contour quadrature failed to converge under point doubling."""


class UnknownPresetError(SelbergLiError, KeyError):
    """Preset name not recognized."""


class DescriptorError(SelbergLiError, ValueError):
    """Invalid Selberg descriptor data (non-positive lambda_j, |omega| != 1, ...)."""


class UnsupportedDescriptorError(SelbergLiError, ValueError):
    """Operation needs arithmetic data the descriptor does not carry (toy presets)."""


class InsufficientEtaTableError(SelbergLiError, ValueError):
    """Eta table does not cover the indices required by the requested n."""


class ZeroTableError(SelbergLiError, ValueError):
    """Zero-table file problem; carries a line number when one is known."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class EmptyZeroTableError(ZeroTableError):
    """A zero sum was requested against an empty table."""
