"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for computational errors raised by this package."""


class CoefficientError(ToolkitError):
    """A scalar cannot be interpreted in the requested field."""


class RingMismatchError(ToolkitError):
    """Operands live in incompatible rings."""


class NotOriginPrimaryError(ToolkitError):
    """A length-type computation was attempted on a quotient that is not
    supported exclusively at the origin."""

    def __init__(self, variable, reason):
        self.variable = variable
        self.reason = reason
        super().__init__(
            f"ideal is not origin-primary: variable '{variable}' {reason}"
        )


class ContainmentError(ToolkitError):
    """An expected ideal containment fails; carries a witness generator."""

    def __init__(self, witness, message):
        self.witness = witness
        super().__init__(message)


class PostulationNotReachedError(ToolkitError):
    """The Hilbert-Samuel differences did not stabilize within the window."""

    def __init__(self, values):
        self.values = tuple(values)
        super().__init__(
            "postulation not reached: colength sequence "
            f"{list(self.values)} has no two consecutive agreeing differences"
        )


class NotCohenMacaulayError(ToolkitError):
    """Cohen-Macaulay type was requested via socles in a ring whose
    measured defect is nonzero."""


class SamplingError(ToolkitError):
    """Random parameter-ideal sampling exhausted its rejection budget."""


class ScriptError(ToolkitError):
    """Syntax or binding error in the input language."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{line}:{column}: {message}"
        super().__init__(message)
