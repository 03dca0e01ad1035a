"""Exact certificates for isolated complex hypersurface singularities.

Finite determinacy bounds, Milnor and Tyurina numbers, Hilbert functions and
socle data of Milnor algebras, quasihomogeneity tests, and the deformation
witnesses showing the determinacy bound is tight; all computed with exact
rational linear algebra on truncated local rings, no standard-basis
machinery anywhere.
"""

from .combinatorics import binom, koszul_kernel_dim, m_sum, n_dim, verify_lemma_comb
from .determinacy import (
    DeterminacyVerdict,
    certify_k_determined,
    d_bound,
    d_bound_case,
    is_regular,
    main_bound,
    tougeron_bound,
)
from .errors import (
    ConsistencyError,
    DimensionMismatch,
    HypothesisViolation,
    InadmissiblePair,
    JetdetError,
    NotCertified,
    NotRegular,
    ParseError,
    ResourceCapExceeded,
)
from .frontend import parse_poly, poly_to_str
from .invariants import (
    CertifiedValue,
    HilbertFunction,
    HilbertResult,
    SaitoVerdict,
    SocleReport,
    detect_weight_system,
    hilbert_function,
    koszul_hilbert_value,
    milnor_number,
    predicted_hilbert,
    saito_test,
    socle_report,
    tyurina_number,
)
from .jetspace import (
    IdealImage,
    JetSpace,
    build_jet_space,
    certified_jacobian,
    certify_power_containment,
    ideal_image,
    jet_membership,
)
from .polyring import (
    Mono,
    Poly,
    WeightSystem,
    euler_defect,
    hessian_det,
    jacobian,
    weighted_degree_range,
)
from .sharpness import (
    SharpnessReport,
    deformed_fermat,
    fermat,
    hessian_deformation,
    obstruction_monomial,
    sharpness_report,
)

__version__ = "0.1.0"
