"""Exception types shared across the workbench."""


class WorkbenchError(Exception):
    """Base class for every structured error raised by this package."""


class FieldMismatch(WorkbenchError):
    """Two scalars or spaces over different ground fields were combined."""


class DivisionByZero(WorkbenchError, ZeroDivisionError):
    pass


class ShapeMismatch(WorkbenchError):
    """Matrix/tensor shapes are inconsistent with the declared spaces."""


class NotInjective(WorkbenchError):
    """A left inverse was requested for a map without full column rank."""


class AntipodeNotInvertible(WorkbenchError):
    """The antipode matrix is singular; identities that need its inverse
    are skipped instead of evaluated."""


class AxiomViolation(WorkbenchError):
    """A groupoid table violates one of the defining axioms."""

    def __init__(self, axiom: str, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"groupoid axiom {axiom} fails at {witness!r}")


class CharacteristicDividesOrder(WorkbenchError):
    """The ground field characteristic divides the group order, so the
    1/N coefficients of the comultiplication do not exist."""


class NotIdempotent(WorkbenchError):
    pass


class NotSubcoalgebra(WorkbenchError):
    pass


class NotDirectSum(WorkbenchError):
    """The identity projections do not decompose the carrier as a direct sum."""


class NotSymmetric(WorkbenchError):
    """The action is not a symmetric partial module coalgebra action."""


class HypothesisViolated(WorkbenchError):
    """A construction hypothesis (grouplike / absorption) does not hold."""

    def __init__(self, which: str, detail: str = ""):
        self.which = which
        super().__init__(f"hypothesis violated: {which}" + (f" ({detail})" if detail else ""))


class InputNotGlobalization(WorkbenchError):
    pass


class InputNotPartialAction(WorkbenchError):
    pass
