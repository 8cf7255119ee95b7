"""Exact 2-rank computations for positive étale wild kernels of quadratic fields."""

from .cyclo import (
    TwistIndex,
    TwoAdicLayerClass,
    global_h0_order,
    is_in_cyclo_z2_global,
    local_h0_order,
    r_set,
    two_adic_layer_class,
)
from .genus import (
    GenusReport,
    exact_sequence_order_check,
    genus_ratio_general,
    genus_ratio_quadratic,
    narrow_2rank_oracle,
    rank_quadratic,
    t_plus,
    vanishing_criterion,
)
from .homology import Finite2Module, herbrand_check, tate_h0, tate_h_minus1
from .kernels import TateKernelPresentation, d_plus_basis, delta_i, norm_index, signature_vector
from .padic import (
    INF,
    hilbert,
    hilbert_product_check,
    is_local_norm,
    is_square_local,
    square_class_at_2,
    v2_pow_minus_one,
)
from .quadfield import QQ, QuadraticField, SplittingType, normalize_radicand

__version__ = "0.1.0"
