"""Exception hierarchy shared by all hyperint modules."""


class HyperintError(Exception):
    """Base class for all library errors."""


class DegreeCapExceeded(HyperintError):
    """A field extension or factorization exceeds the configured size cap."""


class DegreeBoundExceeded(HyperintError):
    """A bounded ansatz search exhausted its degree/power budget."""


class NotGalois(HyperintError):
    """Automorphisms requested on a field that is not known to be Galois."""


class ComposePoleCollision(HyperintError):
    """Substitution u(F) hit the pole set of u identically."""


class EtaNotClosed(HyperintError):
    """The logarithmic-derivative form passed as dH/H is not closed."""


class ConstantF(HyperintError):
    """Tangential derivations requested for a constant function."""


class NonConstantResidue(HyperintError):
    """A residue depends on the remaining variables; the form is not closed."""


class NotClosed(HyperintError):
    """Input 1-form is not closed."""


class NotClosedTwisted(HyperintError):
    """H*omega is not closed for the given dH/H and omega."""


class NotAFunctionOfF(HyperintError):
    """No univariate f with f(F) equal to the given function exists."""


class AlgebraicH(HyperintError):
    """The hyperexponential function determined by the input is algebraic."""


class InternalInconsistency(HyperintError):
    """A step that theory guarantees to succeed failed; a solver bound is too
    small.  Never absorbed silently."""


class PoleOutsideSupport(HyperintError):
    """Univariate reduction input has a pole outside Q*g2."""


class PreconditionViolated(HyperintError):
    """An operation was called outside its documented preconditions."""


class NoHomographyFound(HyperintError):
    """Homography search for the cohomology normalization exhausted."""


class NoShiftPoleAvailable(HyperintError):
    """Residue-at-infinity removal found no pole of order >= 2 nor a pole
    with irrational residue."""


class FirstIntegralDegenerate(HyperintError):
    """The first integral is of lesser Liouvillian type (exact or algebraic
    integrating factor); no rational linearization is produced."""


class ExprSyntaxError(HyperintError):
    """Parse error; carries the offending position."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class UnknownVariable(HyperintError):
    """Expression uses a variable outside the declared set."""
