"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for every domain error raised by this package."""


class ParseError(ToolkitError):
    """Malformed textual input: words, presentations, JSON payloads."""


class RelatorViolation(ToolkitError):
    """A character value vector fails to annihilate some relator."""

    def __init__(self, relator_index, message=None):
        self.relator_index = relator_index
        super().__init__(
            message or f"values do not annihilate relator {relator_index}"
        )


class ZeroCharacter(ToolkitError):
    """The zero character has no direction on the sphere."""


class DimensionMismatch(ToolkitError):
    """Operands live over different ambient spaces."""


class UnsupportedForm(ToolkitError):
    """A sphere set is not reducible to the form an operation requires."""


class NonInvertibleAction(ToolkitError):
    """A transversal conjugation abelianizes to a singular matrix."""


class NotFixed(ToolkitError):
    """A character handed to an extension operation is not action-fixed."""


class ValidationFailure(ToolkitError):
    """An extended character violates a relator of the built presentation."""


class MissingInvariant(ToolkitError):
    """A derivation needs an invariant the input record does not carry."""


class MissingSigma(MissingInvariant):
    pass


class DegreeMismatch(ToolkitError):
    """Records combined at different degrees."""


class UnknownGroup(ToolkitError):
    pass


class UnknownDegree(ToolkitError):
    pass


class BallTooLarge(ToolkitError):
    """Cayley ball construction exceeded the configured vertex cap."""


class DegenerateCharacter(ToolkitError):
    """A probe direction vanishes on every generator of the model."""


class UnsupportedModel(ToolkitError):
    """No normal-form model is available for the requested group."""


class EnumerationLimit(ToolkitError):
    """Finite-group enumeration exceeded its configured cap."""
