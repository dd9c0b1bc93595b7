"""Exact weighted (b,c)-inverses in matrix rings over Q, GF(p) and Z_n."""
from .errors import (BudgetExceededError, InternalInconsistencyError, NonFieldError,
                     NotInvertibleError, PreconditionError, RingMismatchError, WBCError)
from .group import group_inverse, is_group_invertible
from .ring import Q, Matrix, RingSpec, det, inverse, is_invertible
from .weighted import (KINDS, BottDuffinContext, InverseReport, TheoremReport, WeightedContext,
                       along_d, annihilator_inverse, bc_exists, bc_inverse, bc_inverse_via_group,
                       bott_duffin, bott_duffin_necessary, bott_duffin_star, commuting_transport,
                       hybrid_exists, hybrid_inverse, hybrid_via_group, reverse_order, sum_formula)

__version__ = "0.1.0"
