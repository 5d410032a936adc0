"""Exception hierarchy shared by every module of the workbench."""


class SoftGTError(Exception):
    """Base class for all workbench errors."""


class StructuralError(SoftGTError, ValueError):
    """Objects built over different universes/parameter sets, or escaping a carrier."""


class PreconditionError(SoftGTError, ValueError):
    """An operation was called outside its domain (e.g. a non-strong space)."""


class ThresholdExceeded(SoftGTError, RuntimeError):
    """An exact search was asked to handle more members than it will enumerate."""


class CertificationError(SoftGTError, AssertionError):
    """A truncation family disagreed with its expected growth law."""
