"""socle-lab: exact computations in quotients of multivariate polynomial
rings (Groebner bases, colon ideals, lengths, socles, multiplicities) and
a harness that verifies quantitative claims about the equality I^2 = QI
on concrete ring families."""

__version__ = "0.1.0"

from .errors import (
    ContainmentError,
    NotCohenMacaulayError,
    NotOriginPrimaryError,
    PostulationNotReachedError,
    RingMismatchError,
    ScriptError,
    ToolkitError,
)
from .field import GF, QQ, field_for_characteristic
from .order import DEGREVLEX, LEX, MonomialOrder, elimination_order
from .polynomial import Polynomial, normal_form, normal_form_with_quotients, poly_arith
from .ring import Ring
from .groebner import (
    GroebnerBasis,
    buchberger,
    buchberger_with_certificates,
    ideal_equal,
    is_member,
    s_polynomial,
)
from .ideal import (
    IdealHandle,
    colon,
    combine,
    eliminate,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    is_origin_primary,
    krull_dimension,
    maxideal,
    ring_dimension,
    subalgebra_presentation,
    zero_ideal,
)
from .invariants import (
    ArtinianQuotient,
    DepthProbe,
    HilbertSamuel,
    InvariantRecord,
    artinian_quotient,
    buchsbaum_defect,
    cm_type,
    depth_probe,
    hilbert_samuel,
    length,
    min_generators,
    multiplicity,
    relative_length,
    sample_parameter_ideal,
    socle,
    stability_index,
)
from .families import (
    Expected,
    FamilyInstance,
    VerifyConfig,
    fiber_product_ring,
    field_extension_ring,
    regular_param_scenarios,
    section4_ring,
    semigroup_curve_ring,
    verify,
    verify_family,
)
from .parse import parse_polynomial, parse_ring_descriptor, parse_script, serialize_script
from .report import VerificationReport
