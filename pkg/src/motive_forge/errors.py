"""Exception hierarchy shared by every module."""


class MotiveForgeError(Exception):
    """Base class for all computation errors raised by the engine."""


class AdmissibilityError(MotiveForgeError, ValueError):
    """A Cartan type, parabolic subset or other input is not well formed."""


class SizeGuardError(MotiveForgeError):
    """An enumeration would exceed the configured cap."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(
            f"{what} has {size} elements, exceeding the cap of {cap}; "
            f"raise it explicitly (--cap or MOTIVE_FORGE_CAP) to proceed"
        )


class PurityError(MotiveForgeError, ValueError):
    """An operation that needs a pure Tate sum received a mixed one."""


class InvariantError(MotiveForgeError):
    """An internal consistency check failed. Should never fire."""


class ConfigurationError(MotiveForgeError, ValueError):
    """A configuration failed validation; ``report`` carries the details."""

    def __init__(self, report):
        self.report = report
        super().__init__("invalid configuration: " + "; ".join(report.violations))
