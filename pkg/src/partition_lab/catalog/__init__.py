"""Registry of identities, each pairing an enumerated side with a closed form."""

from . import general, mod2, mod3  # noqa: F401  (registers entries)
from .core import (REGISTRY, Discrepancy, Entry, IdentityCase, VerificationReport, all_cases,
                   build_lhs, build_rhs, compare, get_case, get_entry, identity_ids, verify)
from .counting import count, count_A_m, count_C_m, count_refined, marker_pair, members

__all__ = [
    "REGISTRY", "Discrepancy", "Entry", "IdentityCase", "VerificationReport", "all_cases",
    "build_lhs", "build_rhs", "compare", "get_case", "get_entry", "identity_ids", "verify",
    "count", "count_A_m", "count_C_m", "count_refined", "marker_pair", "members",
]
