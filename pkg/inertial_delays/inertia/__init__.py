"""
Relative and absolute inertia: parameters, membership, order, duality,
Zeno analysis and window searches.
"""

from inertial_delays.inertia.membership import (
    MembershipPredicate,
    MembershipResult,
    Violation,
    ai_member,
    combine_members,
    ri_member,
    ri_predicate,
)
from inertial_delays.inertia.params import (
    AIParams,
    RIParams,
    describe_window,
    dual_ri,
    intersection_envelope,
    ri_subset,
    ri_to_ai,
    ri_zeno_free,
)
from inertial_delays.inertia.sampling import pulse_floor, sample_member
from inertial_delays.inertia.windows import (
    Demand,
    WindowDiagnosis,
    demands_from,
    diagnose_window,
    dominating_window,
    fit_ri,
)
from inertial_delays.inertia.zeno import zeno_witness

__all__ = [
    "AIParams",
    "Demand",
    "MembershipPredicate",
    "MembershipResult",
    "RIParams",
    "Violation",
    "WindowDiagnosis",
    "ai_member",
    "combine_members",
    "demands_from",
    "describe_window",
    "diagnose_window",
    "dominating_window",
    "dual_ri",
    "fit_ri",
    "intersection_envelope",
    "pulse_floor",
    "ri_member",
    "ri_predicate",
    "ri_subset",
    "ri_to_ai",
    "ri_zeno_free",
    "sample_member",
    "zeno_witness",
]
