"""Exception hierarchy shared by every module in the package."""


class ModInvError(ArithmeticError):
    """Base class for all numerical failures raised by modinv."""


class DomainError(ModInvError, ValueError):
    """An argument lies outside the domain of the operation."""


class ConvergenceError(ModInvError):
    """An iteration or series did not reach its tolerance within the cap."""


class CuspError(ModInvError):
    """The computation degenerates at a cusp (j is infinite, or tau at i*oo)."""


class NoBranchFound(ModInvError):
    """None of the six branch choices of the inverse passed the residual check."""
