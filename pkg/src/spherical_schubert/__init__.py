"""Spherical Schubert varieties in the Grassmannian.

Combinatorial machinery for deciding whether a Schubert variety in the
Grassmannian, acted on by a Levi subgroup of block sizes (N_1, ..., N_b),
is spherical; equivalently, whether its coordinate ring is multiplicity
free as a Levi module.  The closed-form classification is checked against
a brute-force Littlewood-Richardson decomposition throughout the tests.
"""

__version__ = "0.1.0"

from .shapes import (  # noqa: E402
    Partition,
    SkewShape,
    basic_form,
    complement,
    conjugate,
    format_partition,
    format_skew,
    parse_partition,
    parse_skew,
)
from .lr import (  # noqa: E402
    Tableau,
    expand_skew_schur,
    expand_skew_schur_poly,
    is_multfree_function,
    is_multfree_poly,
    lr_coefficient,
    ssyt_count,
)
from .grassmann import (  # noqa: E402
    Quadruple,
    bruhat_interval,
    bruhat_leq,
    count_standard_monomials,
    h_vector,
    is_reduced,
    is_stable,
    maximal_levi,
    reduce,
    stabilizer_roots,
)
from .heads import (  # noqa: E402
    block_shapes,
    enumerate_heads,
    enumerate_standard_heads,
    head_module_dim,
    head_tableau,
    theta_word,
)
from .classify import (  # noqa: E402
    ClassificationResult,
    Decomposition,
    brute_force_multfree,
    check_MC_fast,
    check_MCC_fast,
    classify,
    classify_max_levi,
    decompose_degree,
    is_toric,
    verify_sweep,
)

__all__ = [
    "ClassificationResult",
    "Decomposition",
    "Partition",
    "Quadruple",
    "SkewShape",
    "Tableau",
    "basic_form",
    "block_shapes",
    "brute_force_multfree",
    "bruhat_interval",
    "bruhat_leq",
    "check_MC_fast",
    "check_MCC_fast",
    "classify",
    "classify_max_levi",
    "complement",
    "conjugate",
    "count_standard_monomials",
    "decompose_degree",
    "enumerate_heads",
    "enumerate_standard_heads",
    "expand_skew_schur",
    "expand_skew_schur_poly",
    "format_partition",
    "format_skew",
    "h_vector",
    "head_module_dim",
    "head_tableau",
    "is_multfree_function",
    "is_multfree_poly",
    "is_reduced",
    "is_stable",
    "is_toric",
    "lr_coefficient",
    "maximal_levi",
    "parse_partition",
    "parse_skew",
    "reduce",
    "ssyt_count",
    "stabilizer_roots",
    "theta_word",
    "verify_sweep",
]
