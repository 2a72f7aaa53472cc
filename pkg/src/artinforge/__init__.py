"""artinforge: an exact computer-algebra workbench for a family of binomial
ideals and their Artinian quotients, with a registry of machine-checked
structural claims."""

from .errors import (
    AmbientMismatchError,
    EquivarianceError,
    NonReducedBasisError,
    NotArtinianError,
    ResourceLimitError,
)
from .groebner import (
    DEFAULT_PAIR_CAP,
    GroebnerBasis,
    MonomialIdeal,
    buchberger,
    colon_ideal,
    eliminate,
    ideal_equal,
    ideal_member,
    initial_ideal,
    intersect,
    is_regular_element,
    krull_dim_monomial,
    substitute,
    substitute_ideal,
    top_form_ideal,
)
from .paperlab import (
    CLAIMS,
    BernoulliTriangle,
    CyclotomicElement,
    SymbolicPoint,
    VerificationReport,
    bernoulli,
    build_ideal,
    challenge_series,
    cyclotomic_poly,
    enumerate_points,
    expected_codimension,
    identity_check,
    row_sum_check,
    verify,
    verify_points_satisfy_ideal,
)
from .polyarith import (
    DEGLEX,
    GREVLEX,
    LEX,
    Ideal,
    Polynomial,
    PolyRing,
    TermOrder,
    cmp_monomials,
    format_polynomial,
    parse_polynomial,
    reduce,
    s_polynomial,
    xring,
    yring,
)
from .quotient import (
    QuotientAlgebra,
    StandardBasis,
    annihilator,
    contract,
    coords,
    equivariant_graded_trace,
    hilbert_series,
    mult_matrix,
    socle_dimension,
    standard_monomials,
)
from .reptheory import (
    ClassFunction,
    GradedClassFunction,
    Permutation,
    conjugacy_classes,
    cycle_type,
    half_powerset_character,
    partitions,
    powerset_character,
    subset_character,
    trivial_character,
    xn_character,
)

__version__ = "0.1.0"
