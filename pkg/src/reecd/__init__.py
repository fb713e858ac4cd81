"""Exact-arithmetic character-degree toolkit for the small Ree groups
²G₂(q), q = 3**f with f odd, and their almost simple extensions."""

from .elimination import (
    REASON_CODES,
    CheckReport,
    EliminationOutcome,
    MixedThreePartSummary,
    NotApplicableError,
    TheoremViolationError,
    eliminate_candidate,
    enumerate_candidates,
    eta_inertia_check,
    final_degree_check,
    max_v3_mixed,
    run_elimination,
    solvable_quotient_checks,
    steinberg_constraint,
    step3_divisibility_check,
)
from .exactmath import (
    cyclotomic_eval,
    divisors,
    gcd,
    is_prime,
    is_prime_power,
    part_p,
    val_p,
)
from .lie_data import (
    A5_EXTENDIBLE_DEGREE,
    A6_EXTENDIBLE_DEGREE,
    A7_EXTENDIBLE_DEGREE,
    LIE_FAMILIES,
    TITS_NAME,
    AlternatingCandidate,
    LieCandidate,
    SimpleCandidate,
    SporadicCandidate,
    SporadicFact,
    TitsCandidate,
    alt_16_witness,
    alt_char_degree,
    sporadic_fact,
    sporadic_names,
    steinberg_exponent,
    unipotent_degree,
)
from .ree import (
    EXTENDING_LINES,
    AlmostSimpleSpec,
    DegreeEntry,
    DegreeSet,
    MaxFilterOutcome,
    MaxSubgroupRow,
    ReeDegreeTable,
    ReeParams,
    cd_superset,
    certified_degrees,
    gcd_identities_check,
    group_order,
    is_isolated,
    max_two_part,
    maximal_index_filter,
    maximal_subgroups,
    prime_power_degrees,
    ree_degree_table,
    ree_params,
    smallest_even_degree,
)

__version__ = "0.1.0"
