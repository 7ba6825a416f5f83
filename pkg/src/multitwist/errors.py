"""Exception hierarchy.

Everything raised deliberately by this package derives from
:class:`MultiTwistError`.  ``InternalInconsistency`` is special: it signals
that two provably-equal quantities disagreed, i.e. a bug, and the CLI maps
it to its own exit code.
"""


class MultiTwistError(Exception):
    """Base class for all errors raised by this package."""


class SchemaError(MultiTwistError):
    """A configuration document is malformed (bad JSON, wrong types/keys)."""


class ValidationError(MultiTwistError):
    """A well-formed document violates a semantic invariant."""


class NotConnected(MultiTwistError):
    """Operation requires a connected configuration graph."""


class NotIrreducible(MultiTwistError):
    """Matrix is not irreducible (support digraph not strongly connected)."""


class NoConvergence(MultiTwistError):
    """Iteration budget exhausted before reaching the requested tolerance."""


class NoRealRoot(MultiTwistError):
    """Polynomial has no real root."""


class NotRecessive(MultiTwistError):
    """Operation requires a recessive configuration graph."""


class RationalReconstructionFailed(MultiTwistError):
    """A rotation angle could not be recognised as a rational multiple of pi."""


class DominantHasNoClosedForm(MultiTwistError):
    """Closed-form spectral radius exists only below or at 2."""


class MuNotAboveTwo(MultiTwistError):
    """Operation requires the spectral radius to exceed 2."""


class ToleranceAmbiguous(MultiTwistError):
    """A trace lies within tolerance of 2 and the classification matters.

    Raised instead of guessing between parabolic and elliptic/hyperbolic.
    """


class NonOrientableOrInconsistent(MultiTwistError):
    """Face tracing of an embedding did not produce a closed oriented surface."""


class NotSmallType(MultiTwistError):
    """Operation requires a graph without multiple edges."""


class NotInG0(MultiTwistError):
    """Component word does not twist every component non-trivially."""


class InternalInconsistency(MultiTwistError):
    """Two independently computed quantities that must agree did not.

    This is a bug signal, never a user-input problem.
    """
