"""Desk-scale forcing over finite quasi-orders.

Decides whether a transitive hereditarily finite set ``X`` is ``t[G]`` for
some generic filter ``G`` by a decreasing fixpoint iteration over
superconditions, builds witnessing generics, and cross-checks every answer
against brute-force enumeration of the generics.
"""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    CapExceededError,
    FixpointViolation,
    ForcingLabError,
    NotForcedTransitiveError,
    NotTransitiveError,
    ParseError,
)
from .config import Caps, DEFAULT_CAPS  # noqa: E402
from .hf import (  # noqa: E402
    EMPTY,
    HfSet,
    ackermann_code,
    enumerate_transitive_sets,
    format_hf,
    is_transitive,
    ordinal,
    parse_hf,
    rank,
)
from .order import (  # noqa: E402
    Filter,
    Quasiorder,
    build_quasiorder,
    generic_filters,
    is_dense,
    minimal_classes,
)
from .names import ZERO, PName, interpret, name, name_rank, potential_elements, validate_name  # noqa: E402
from .forcing import (  # noqa: E402
    decides,
    forces_membership,
    forces_membership_syntactic,
    forces_nonmembership,
    forces_transitive,
    is_d_complete,
)
from .sigma import (  # noqa: E402
    COUPLED,
    SEPARATED,
    Supercondition,
    SigmaTrace,
    Verdict,
    build_generic,
    check_generic_generated,
    classify_by_bound,
    lambda_star,
    probe_open_question,
    sc_leq,
    sigma_fixpoint,
    sigma_hat,
    sigma_level0,
    sigma_step,
    superconditions,
)
from .oracle import check_sf, check_sgG, generic_sets  # noqa: E402
from .specfile import ForcingSpec, format_spec, load_spec, parse_spec  # noqa: E402

__all__ = [
    "CapExceededError",
    "EMPTY",
    "Filter",
    "decides",
    "COUPLED",
    "FixpointViolation",
    "ForcingLabError",
    "NotForcedTransitiveError",
    "NotTransitiveError",
    "ParseError",
    "HfSet",
    "ackermann_code",
    "enumerate_transitive_sets",
    "format_hf",
    "is_transitive",
    "ordinal",
    "parse_hf",
    "rank",
    "Quasiorder",
    "build_quasiorder",
    "generic_filters",
    "is_dense",
    "minimal_classes",
    "forces_membership",
    "forces_membership_syntactic",
    "forces_nonmembership",
    "forces_transitive",
    "is_d_complete",
    "SEPARATED",
    "Supercondition",
    "SigmaTrace",
    "Verdict",
    "build_generic",
    "check_generic_generated",
    "classify_by_bound",
    "lambda_star",
    "probe_open_question",
    "sc_leq",
    "sigma_fixpoint",
    "sigma_hat",
    "sigma_level0",
    "sigma_step",
    "superconditions",
    "Caps",
    "DEFAULT_CAPS",
    "ZERO",
    "PName",
    "interpret",
    "name",
    "name_rank",
    "potential_elements",
    "validate_name",
    "check_sf",
    "check_sgG",
    "generic_sets",
    "ForcingSpec",
    "format_spec",
    "load_spec",
    "parse_spec",
]
