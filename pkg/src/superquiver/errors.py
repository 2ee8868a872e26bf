"""Exception hierarchy shared by the whole engine."""


class EngineError(Exception):
    """Base class for all errors raised by this package."""


class SignatureError(EngineError):
    """Operands live over different (even, odd) variable signatures."""


class NotDivisible(EngineError, ArithmeticError):
    """No exact quotient exists in the Laurent ring."""


class NotUnit(EngineError, ArithmeticError):
    """Element is not of the form (+-1) * monomial * (1 + nilpotent)."""


class SubstitutionError(EngineError):
    """Missing or inadmissible image in a substitution map."""


class QuiverError(EngineError):
    """Structurally invalid quiver data."""


class FrozenVertex(QuiverError):
    """Mutation requested at a frozen vertex."""


class IndexOutOfRange(QuiverError, IndexError):
    """Vertex or odd index outside the declared ranges."""


class RequiresTwoOddVertices(QuiverError):
    """Weight-function operations need exactly two odd vertices."""


class UnknownName(EngineError, KeyError):
    """No builder registered under the requested name."""


class MalformedColoredQuiver(EngineError):
    """Colored quiver cannot be translated back to an extended quiver."""


class NotInGroup(EngineError):
    """Supermatrix does not satisfy the defining group relations."""


class ParityError(EngineError):
    """Entry has the wrong Grassmann parity for its slot."""


class RelationViolation(EngineError):
    """Diamond entries do not satisfy the frieze rule."""


class InvalidWidth(EngineError, ValueError):
    """Frieze width must be a positive integer."""


class CoefficientExtractionFailure(EngineError):
    """Frieze rows do not yield a consistent coefficient sequence."""
