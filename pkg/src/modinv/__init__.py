"""Inversion of the modular invariant j by radicals and the AGM.

``j`` is normalised so that ``j(i) = 1``; use :func:`j_klein` for 1728.
"""

from .complex_numerics import AgmConfig, agm, agm_g, cbrt_branch, principal_sqrt
from .errors import ConvergenceError, CuspError, DomainError, ModInvError, NoBranchFound
from .forward_modular import (
    ThetaConfig,
    j_from_lambda,
    j_klein,
    j_paper,
    lambda_from_theta,
    nome,
    theta_nullwerte,
)
from .inverse_chain import (
    BranchChoice,
    InversionResult,
    invert_principal,
    invert_verified,
    k0,
    k1,
    k2,
    k3,
)
from .moduli_reduction import UnimodularMatrix, is_equivalent, reduce
from .special_values import SpecialValueEntry, check_ascending, evaluate_entry, table

__version__ = "0.1.0"

__all__ = [
    "AgmConfig", "agm", "agm_g", "cbrt_branch", "principal_sqrt",
    "ConvergenceError", "CuspError", "DomainError", "ModInvError", "NoBranchFound",
    "ThetaConfig", "j_from_lambda", "j_klein", "j_paper", "lambda_from_theta", "nome", "theta_nullwerte",
    "BranchChoice", "InversionResult", "invert_principal", "invert_verified", "k0", "k1", "k2", "k3",
    "UnimodularMatrix", "is_equivalent", "reduce",
    "SpecialValueEntry", "check_ascending", "evaluate_entry", "table",
]
