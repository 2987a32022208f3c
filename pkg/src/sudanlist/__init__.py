"""List decoding of Reed-Solomon codes by weighted-degree interpolation.

Recovers every polynomial of bounded degree that agrees with a noisy point set
on at least ``t`` points, both for points in the plane and for functions on a
``k``-dimensional grid ``H^k``.
"""

from .errors import (
    BudgetExceeded,
    FieldMismatchError,
    GridInfeasible,
    InterpolationFailure,
    ParameterError,
)
from .field import FieldCtx, FieldElement, add, find_generator, inv, mul
from .poly import NEG_INF, MultiPoly, UniPoly
from .interp import count_monomials, find_vanishing_poly, monomial_basis
from .rootfind import is_y_root, multivariate_y_roots, univariate_y_roots
from .decoder import (
    Candidate,
    DecodeOutput,
    DecoderParams,
    GridInstance,
    choose_parameters,
    grid_feasibility,
    grid_reconstruct,
    list_decode,
    schwartz_zippel_test,
)
from .codec import (
    Codeword,
    RSCode,
    corrupt,
    encode,
    hamming_distance,
    list_decode_code,
    ml_decode_bruteforce,
    tau_capability,
)

__version__ = "0.1.0"
