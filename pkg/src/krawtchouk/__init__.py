"""Exact Krawtchouk matrices, Hadamard transforms and the random walks behind them."""

from .core import (
    binomial,
    binomial_diagonal,
    check_identities,
    kraw_entry,
    kraw_matrix,
    kraw_matrix_square_fill,
    sym_kraw_matrix,
)
from .matrix import ExactMatrix, RationalMatrix
from .series import RationalSeries
from .symtensor import (
    MultiIndex,
    char_reciprocal_series,
    enumerate_multi_indices,
    symmetric_representation,
    symmetric_trace,
    verify_symmetric_trace_theorem,
)
from .transforms import (
    TransformPlan,
    fwht,
    hadamard_matrix,
    kraw_inverse,
    kraw_transform,
    kronecker,
)
from .walks import (
    WalkState,
    apply_x_f_full,
    apply_x_g_full,
    check_intertwine_full,
    check_intertwine_reduced,
    chebyshev_series_check,
    elementary_symmetric,
    ground_state_mgf,
    martingale_check_exact,
    monte_carlo_martingale,
    normalized_trace_mgf,
    spectrum_reduced,
    symmetric_trace_mgf,
    x_f_reduced,
    x_g_reduced,
)

__version__ = "0.1.0"
