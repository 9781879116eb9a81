"""Linear codes over R_q = F_2[u_1, ..., u_q] / (u_i^2 = 0).

Ring elements are int bitmasks of length 2^q (bit j is the coefficient of the
monomial u_A whose index set has mask j); vectors and matrices are numpy
arrays of such masks.  Binary codes are 0/1 uint8 arrays with int-bitset
GF(2) linear algebra underneath.
"""

from .analysis import (
    CoveringRadiusResult,
    WeightDistribution,
    count_types,
    covering_radius,
    covering_radius_exhaustive,
    covering_radius_gray_syndrome,
    covering_radius_profile_dp,
    distance_to_code,
    max_distance,
    weight_distribution,
)
from .audit import AuditBudget, AuditReport, catalog_ids, run_audit, run_claims, structural_checks
from .binary import BinaryCode
from .constructions import (
    FAMILIES,
    binary_macdonald,
    binary_simplex_alpha,
    binary_simplex_beta,
    block_repetition_generator,
    build_family,
    macdonald_alpha_generator,
    macdonald_beta_generator,
    repetition_generator,
    simplex_alpha_generator,
    simplex_alpha_width,
    simplex_beta_generator,
    simplex_beta_width,
)
from .errors import ParameterError, ResourceLimitError, RqError
from .linalg import (
    CodeOverRq,
    RqMatrix,
    column_multiset_equal,
    concatenation_multiplicity,
    enumerate_code,
    format_matrix,
    gray_image_code,
    gray_image_matrix,
    is_concatenation_of,
    parse_matrix,
    project_matrix,
    reduction_code,
    residue_code,
    torsion_code,
    torsion_generator,
)
from .ring import (
    RingSpec,
    RqElement,
    chi,
    hom_gray,
    hom_weight_character,
    hom_weight_closed,
    is_unit,
    lee_gray,
    lee_weight,
    make_ring,
    mul,
    parse_element,
)

__version__ = "0.1.0"
